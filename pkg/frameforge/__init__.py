#!/usr/bin/env python
"""Top-level module for frameforge"""

# Import the necessary modules
from .exceptions import *
from . import linalg
from . import frames
from . import matroids
from . import partitioners
from . import paving
from . import util
from . import schema
from .version import version as __version__

from .core import *
from .linalg import Tolerance, DEFAULT_TOL
from .frames import Frame
