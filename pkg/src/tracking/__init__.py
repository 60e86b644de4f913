"""Optional MLflow logging of sweep and validation runs."""
import os
import re
from typing import Any, Dict, Iterable, Optional

from src.logger import logging

DEFAULT_TRACKING_URI = 'file:./mlruns'


def setup_mlflow(config: Dict[str, Any]):
    """Initializes MLflow for tracking; ``MLFLOW_TRACKING_URI`` wins over the configured URI."""
    import mlflow

    tracking_uri = os.getenv('MLFLOW_TRACKING_URI') or config.get('tracking_uri') or DEFAULT_TRACKING_URI
    mlflow.set_tracking_uri(tracking_uri)
    mlflow.set_experiment(config.get('experiment_name', 'entropic-uncertainty'))
    logging.info('MLflow setup complete. Tracking to: %s', tracking_uri)
    return mlflow


def _flatten(prefix: str, values: Dict[str, Any], out: Dict[str, Any]) -> Dict[str, Any]:
    for key, value in values.items():
        name = f'{prefix}.{key}' if prefix else str(key)
        if isinstance(value, dict):
            _flatten(name, value, out)
        else:
            out[re.sub(r'[^\w\-./ ]', '_', name)] = value
    return out


def log_run(config: Dict[str, Any], run_name: str, params: Dict[str, Any], metrics: Dict[str, Any],
            artifacts: Optional[Iterable[str]] = None) -> Optional[str]:
    """Log one run when tracking is enabled; returns the run id or None."""
    if not config.get('enabled', False):
        return None
    try:
        mlflow = setup_mlflow(config)
        with mlflow.start_run(run_name=run_name) as run:
            mlflow.log_params({k: str(v) for k, v in _flatten('', params, {}).items()})
            numeric = {k: float(v) for k, v in _flatten('', metrics, {}).items()
                       if isinstance(v, (int, float)) and not isinstance(v, bool)}
            mlflow.log_metrics(numeric)
            for path in artifacts or ():
                if path and os.path.exists(path):
                    mlflow.log_artifact(path)
            logging.info('Logged run %s (%s) to MLflow', run.info.run_id, run_name)
            return run.info.run_id
    except Exception as e:
        logging.error('Failed to log run %s to MLflow: %s', run_name, e)
        raise
