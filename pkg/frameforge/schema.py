#!/usr/bin/env python
# -*- encoding: utf-8 -*-
r'''
Certificate schema
------------------

.. autosummary::
    :toctree: generated/

    definition
    validator
    list_definitions
'''

import json
from functools import lru_cache
from importlib import resources

import jsonschema

from .exceptions import SchemaError, FrameForgeError

__all__ = ['definition', 'validator', 'list_definitions',
           'CERTIFICATE_SCHEMA', 'SCHEMA_VERSION']


def definition(name):
    '''Get the schema definition of a certificate object type.

    Parameters
    ----------
    name : str
        Object type, eg, 'PartitionCertificate'

    Returns
    -------
    schema : dict

    Raises
    ------
    SchemaError
        If no such definition exists
    '''
    try:
        return CERTIFICATE_SCHEMA['definitions'][name]
    except KeyError:
        raise SchemaError('Unknown certificate type: {}'.format(name))


@lru_cache(maxsize=None)
def validator(name):
    '''A Draft 4 validator for one certificate object type.

    References between definitions resolve against the full schema.

    Parameters
    ----------
    name : str
        Object type

    Returns
    -------
    validator : jsonschema.Draft4Validator
    '''
    definition(name)
    return jsonschema.Draft4Validator(
        {'$ref': '#/definitions/{}'.format(name),
         'definitions': CERTIFICATE_SCHEMA['definitions']})


def list_definitions():
    '''Names of all certificate object types'''
    return sorted(CERTIFICATE_SCHEMA['definitions'])


def __load_schema():
    '''Load the schema file from the package.'''

    schema_file = (resources.files(__package__)
                   .joinpath(SCHEMA_DIR)
                   .joinpath('certificate_schema.json'))

    cert_schema = None
    with schema_file.open(mode='r') as fdesc:
        cert_schema = json.load(fdesc)

    if cert_schema is None:
        raise FrameForgeError('Unable to load certificate schema')

    jsonschema.Draft4Validator.check_schema(cert_schema)
    return cert_schema


SCHEMA_DIR = 'schemata'
SCHEMA_VERSION = '1'

CERTIFICATE_SCHEMA = __load_schema()
