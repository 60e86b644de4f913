import logging
import os
from logging.handlers import RotatingFileHandler
from datetime import datetime
import sys

# Constants for log configuration
LOG_DIR = 'logs'
LOG_FILE = f"{datetime.now().strftime('%m_%d_%Y_%H_%M_%S')}.log"
MAX_LOG_SIZE = 5 * 1024 * 1024  # 5 MB
BACKUP_COUNT = 3  # Number of backup log files to keep
LOG_FORMAT = "[ %(asctime)s ] %(name)s - %(levelname)s - %(message)s"

# Environment overrides
LEVEL_ENV = 'EUR_LOG_LEVEL'
FILE_ENV = 'EUR_LOG_TO_FILE'

root_dir = os.path.dirname(os.path.abspath(os.path.join(os.path.dirname(__file__), '../')))
log_dir_path = os.path.join(root_dir, LOG_DIR)
log_file_path = os.path.join(log_dir_path, LOG_FILE)

_HANDLER_TAG = '_eur_handler'


def _console_level() -> int:
    name = os.getenv(LEVEL_ENV, 'INFO').upper()
    return getattr(logging, name, logging.INFO)


def configure_logger(level: int = None) -> logging.Logger:
    """
    Configures the root logger with a rotating file handler and a console handler.

    The console handler writes to stderr so that CSV and JSON emitted on stdout stay
    byte-identical between runs. Calling this more than once only updates levels.
    """
    logger = logging.getLogger()
    logger.setLevel(logging.DEBUG)
    console_level = level if level is not None else _console_level()

    existing = [h for h in logger.handlers if getattr(h, _HANDLER_TAG, False)]
    if existing:
        for handler in existing:
            if isinstance(handler, logging.StreamHandler) and not isinstance(handler, RotatingFileHandler):
                handler.setLevel(console_level)
        return logger

    formatter = logging.Formatter(LOG_FORMAT)

    if os.getenv(FILE_ENV, '1') != '0':
        try:
            os.makedirs(log_dir_path, exist_ok=True)
            file_handler = RotatingFileHandler(log_file_path, maxBytes=MAX_LOG_SIZE,
                                               backupCount=BACKUP_COUNT, encoding="utf-8")
            file_handler.setFormatter(formatter)
            file_handler.setLevel(logging.INFO)
            setattr(file_handler, _HANDLER_TAG, True)
            logger.addHandler(file_handler)
        except OSError as e:
            # read-only checkouts still get console logging
            sys.stderr.write(f"log file disabled: {e}\n")

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setFormatter(formatter)
    console_handler.setLevel(console_level)
    setattr(console_handler, _HANDLER_TAG, True)
    logger.addHandler(console_handler)
    return logger


# Configure the logger
configure_logger()
