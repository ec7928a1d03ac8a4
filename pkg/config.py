from attrdict import AttrDict
from decouple import config as env_config

from torelli.utils import (DEFAULT_MAX_CYCLIC_EDGES, DEFAULT_MAX_EDGES, DEFAULT_MAX_FIBER, DEFAULT_MAX_ORBIT,
                           DEFAULT_MAX_SEARCH)


def cast2(type_):
    return lambda val: val if val is None else type_(val)


def get_caps_config():
    config = AttrDict({'max_edges': env_config('TORELLI_MAX_EDGES', default=DEFAULT_MAX_EDGES, cast=int),
                       'max_cyclic_edges': env_config('TORELLI_MAX_CYCLIC_EDGES', default=DEFAULT_MAX_CYCLIC_EDGES, cast=int),
                       'max_orbit': env_config('TORELLI_MAX_ORBIT', default=DEFAULT_MAX_ORBIT, cast=int),
                       'max_fiber': env_config('TORELLI_MAX_FIBER', default=DEFAULT_MAX_FIBER, cast=int),
                       'max_search': env_config('TORELLI_MAX_SEARCH', default=DEFAULT_MAX_SEARCH, cast=int),
                       })

    return config


def get_report_config():
    config = AttrDict({'format': env_config('TORELLI_FORMAT', default='human', cast=str),
                       'progress': env_config('TORELLI_PROGRESS', default=False, cast=bool),
                       'dot_path': env_config('TORELLI_DOT_PATH', default=None, cast=cast2(str)),
                       })

    return config
