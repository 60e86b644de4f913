"""State/basis JSON files, run parameters and report writers."""
import copy
import json
import math
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np
import pandas as pd
import yaml

from src.logger import logging
from src.qcore import ProjectiveBasis, QuantumState, validate_basis, validate_state

ROOT_DIR = Path(__file__).resolve().parents[2]
DEFAULT_PARAMS_PATH = ROOT_DIR / 'params.yaml'

SIGNIFICANT_DIGITS = 12
CSV_FLOAT_FORMAT = '%.12g'

DEFAULT_PARAMS: Dict[str, Any] = {
    'sweep': {'steps': 50, 'fig3_steps': 9, 'grid': 10, 'out_dir': 'reports/figures'},
    'bounds': {'lambdas': [0.0, 0.25, 0.5, 0.75, 1.0]},
    'witness': {'budget': 200, 'seed': 7},
    'validate': {'n': 500, 'dims': [2, 2], 'measurements': 2, 'seed': 7},
    'frame': {'max_alternations': 500, 'convergence': 1e-10},
    'tracking': {'enabled': False, 'tracking_uri': None, 'experiment_name': 'entropic-uncertainty'},
}


class FileFormatError(ValueError):
    """A state, basis or parameter file is malformed."""


def _merge(base: Dict[str, Any], override: Dict[str, Any]) -> Dict[str, Any]:
    merged = copy.deepcopy(base)
    for key, value in (override or {}).items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_params(params_path: Optional[str] = None) -> Dict[str, Any]:
    """Load parameters from a YAML file on top of the built-in defaults.

    Without an explicit path a missing repository ``params.yaml`` falls back to the defaults.
    """
    path = Path(params_path) if params_path else DEFAULT_PARAMS_PATH
    if params_path is None and not path.exists():
        logging.debug('No %s, using built-in parameters', path)
        return copy.deepcopy(DEFAULT_PARAMS)
    try:
        with open(path, 'r') as file:
            params = yaml.safe_load(file) or {}
        logging.debug('Parameters retrieved from %s', path)
        return _merge(DEFAULT_PARAMS, params)
    except FileNotFoundError:
        logging.error('File not found: %s', path)
        raise
    except yaml.YAMLError as e:
        logging.error('YAML error: %s', e)
        raise


def _load_json(path: str) -> Dict[str, Any]:
    try:
        with open(path, 'r') as file:
            return json.load(file)
    except FileNotFoundError:
        logging.error('File not found: %s', path)
        raise
    except json.JSONDecodeError as e:
        logging.error('Malformed JSON in %s: %s', path, e)
        raise FileFormatError(f"{path}: {e}") from e


def read_state_file(path: str) -> QuantumState:
    """StateFile: {"dims": [...], "re": [[...]], "im": [[...]]}."""
    data = _load_json(path)
    try:
        dims = [int(d) for d in data['dims']]
        re = np.asarray(data['re'], dtype=float)
        im = np.asarray(data.get('im', np.zeros_like(re)), dtype=float)
    except (KeyError, TypeError, ValueError) as e:
        logging.error('Bad state file %s: %s', path, e)
        raise FileFormatError(f"{path}: state file needs dims, re and im ({e})") from e
    if re.shape != im.shape:
        raise FileFormatError(f"{path}: re and im have different shapes {re.shape} and {im.shape}")
    return validate_state(re + 1j * im, dims)


def read_basis_file(path: str) -> ProjectiveBasis:
    """BasisFile: {"dim": d, "vectors": [{"re": [...], "im": [...]}, ...]}."""
    data = _load_json(path)
    try:
        dim = int(data['dim'])
        vectors = [np.asarray(v['re'], dtype=float) + 1j * np.asarray(v.get('im', [0.0] * dim), dtype=float)
                   for v in data['vectors']]
    except (KeyError, TypeError, ValueError) as e:
        logging.error('Bad basis file %s: %s', path, e)
        raise FileFormatError(f"{path}: basis file needs dim and vectors ({e})") from e
    if len(vectors) != dim or any(v.shape != (dim,) for v in vectors):
        raise FileFormatError(f"{path}: expected {dim} vectors of length {dim}")
    return validate_basis(np.array(vectors), label=Path(path).stem)


def state_document(state: QuantumState) -> Dict[str, Any]:
    m = np.asarray(state.matrix)
    return {'dims': list(state.dims), 're': m.real.tolist(), 'im': m.imag.tolist()}


def basis_document(basis: ProjectiveBasis) -> Dict[str, Any]:
    return {'dim': basis.dim,
            'vectors': [{'re': basis.vectors[:, i].real.tolist(), 'im': basis.vectors[:, i].imag.tolist()}
                        for i in range(basis.dim)]}


def rounded(value: Any) -> Any:
    """Floats to 12 significant digits, non-finite floats as strings, containers recursively."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return str(value)
        return float(f'{value:.{SIGNIFICANT_DIGITS}g}')
    if isinstance(value, dict):
        return {str(k): rounded(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [rounded(v) for v in value]
    return value


def dump_json(data: Dict[str, Any], file_path: Optional[str] = None, exact: bool = False) -> None:
    """Write ``data`` with sorted keys to ``file_path`` or stdout.

    ``exact`` keeps full float precision (state and basis files meant for replay).
    """
    payload = data if exact else rounded(data)
    text = json.dumps(payload, indent=2, sort_keys=True) + '\n'
    if file_path is None:
        sys.stdout.write(text)
        return
    try:
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(file_path, 'w') as file:
            file.write(text)
        logging.info('JSON data successfully saved to %s', file_path)
    except OSError as e:
        logging.error('Error saving JSON to %s: %s', file_path, e)
        raise


def write_csv(df: pd.DataFrame, file_path: Optional[str] = None) -> None:
    if file_path is None:
        df.to_csv(sys.stdout, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n')
        return
    try:
        directory = os.path.dirname(file_path)
        if directory:
            os.makedirs(directory, exist_ok=True)
        df.to_csv(file_path, index=False, float_format=CSV_FLOAT_FORMAT, lineterminator='\n')
        logging.info('CSV with %d rows saved to %s', len(df), file_path)
    except OSError as e:
        logging.error('Error saving CSV to %s: %s', file_path, e)
        raise
