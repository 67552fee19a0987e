import logging

LOG_FORMAT = '%(name)s:%(levelname)s:%(message)s'

logging.basicConfig(format=LOG_FORMAT)
logger = logging.getLogger('odl')


def get_logger(name: str = None) -> logging.Logger:
    if not name:
        return logger
    return logger.getChild(name)


def set_verbosity(verbose: bool = False, debug: bool = False):
    if debug:
        level = logging.DEBUG
    elif verbose:
        level = logging.INFO
    else:
        level = logging.WARNING
    logger.setLevel(level=level)
    return level
