"""Flask REST API routes for the verification service."""
import logging
import uuid
from datetime import datetime
from typing import Any, Dict

from flask import Blueprint, jsonify, request

from src.askey.config import Config, schema_errors, spec_from_document
from src.askey.errors import ConfigError
from src.askey.families import FAMILIES
from src.askey.report import report_to_dict, summary_frame
from src.askey.runner import run
from src.askey.validators import SuiteValidator


logger = logging.getLogger(__name__)

# Create API blueprint
api_bp = Blueprint('api', __name__, url_prefix='/api')

# In-memory storage for verification reports
verification_results: Dict[str, Dict[str, Any]] = {}

SUITE_KEYS = ("families", "suites", "n_max", "jobs", "seed", "mutate")


def _document_from_request(data: Dict[str, Any]) -> Dict[str, Any]:
    document: Dict[str, Any] = {"suite": {key: data[key] for key in SUITE_KEYS if key in data}}
    if "numeric" in data:
        document["numeric"] = data["numeric"]
    if "bindings" in data:
        document["bindings"] = data["bindings"]
    return document


def _family_info(tag: str) -> Dict[str, Any]:
    family = FAMILIES[tag]
    return {
        "tag": family.tag,
        "name": family.name,
        "mechanics": family.mechanics,
        "coordinate": family.coordinate,
        "m": family.m_degree,
        "delta": [str(shift) for shift in family.delta],
        "slots": [
            {"name": slot.name, "mode": slot.mode, "domain": slot.domain, "shift": str(slot.shift)}
            for slot in family.slots
        ],
        "uses_q": family.uses_q,
        "uses_phase": family.uses_phase,
    }


@api_bp.route('/verify', methods=['POST'])
def verify():
    """Run verification suites.

    Request Body:
        {
            "families": ["MP", "AW"],
            "suites": ["basic", "christoffel"],
            "n_max": 4,
            "bindings": [{"family": "MP", "values": {"a": "1/2", "phase": "2,1"}}]
        }

    Returns:
        200 OK: Run completed (check statuses are in the report)
        {
            "status": "success",
            "run_id": "verify_run_...",
            "execution_time_sec": 0.123,
            "counts": {"pass": 10, "fail": 0, "skipped": 0},
            "report": {...}
        }

        400 Bad Request: Validation error
        {
            "status": "validation_error",
            "errors": [...],
            "warnings": [...]
        }

        500 Internal Server Error: Unexpected error during the run
    """
    try:
        data = request.get_json(force=True, silent=True)

        if not data or not isinstance(data, dict):
            return jsonify({
                "status": "error",
                "error_message": "No JSON data provided"
            }), 400

        document = _document_from_request(data)

        errors = [error.message for error in schema_errors(document)]
        if errors:
            return jsonify({"status": "validation_error", "errors": errors, "warnings": []}), 400

        result = SuiteValidator().validate(document)
        if not result.is_valid:
            return jsonify({
                "status": "validation_error",
                "errors": result.errors,
                "warnings": result.warnings
            }), 400

        try:
            spec = spec_from_document(document, defaults=Config)
        except ConfigError as e:
            return jsonify({"status": "validation_error", "errors": [str(e)], "warnings": result.warnings}), 400

        run_id = f"verify_run_{datetime.now().strftime('%Y%m%d_%H%M%S')}_{uuid.uuid4().hex[:6]}"

        start_time = datetime.now()
        logger.info(f"Starting verification {run_id}")
        report = run(spec)
        execution_time = (datetime.now() - start_time).total_seconds()
        logger.info(f"Verification {run_id} completed in {execution_time:.3f}s")

        verification_results[run_id] = {
            "run_id": run_id,
            "request": data,
            "report": report,
            "execution_time": execution_time,
            "timestamp": start_time.isoformat()
        }

        return jsonify({
            "status": "success",
            "run_id": run_id,
            "execution_time_sec": execution_time,
            "counts": report.counts(),
            "warnings": result.warnings,
            "report": report_to_dict(report)
        }), 200

    except Exception as e:
        logger.error(f"Verification error: {str(e)}", exc_info=True)
        return jsonify({
            "status": "verification_error",
            "error_message": str(e)
        }), 500


@api_bp.route('/reports/<run_id>', methods=['GET'])
def get_report(run_id: str):
    """Retrieve the full report of a completed run.

    Query Parameters:
        family: Filter by family tag (optional)
        suite: Filter by suite (optional)
        status: Filter by status (optional)

    Returns:
        200 OK: Report retrieved successfully
        404 Not Found: Run ID does not exist
    """
    if run_id not in verification_results:
        return jsonify({
            "status": "error",
            "error_message": f"Verification run '{run_id}' not found"
        }), 404

    document = report_to_dict(verification_results[run_id]['report'])

    runs = document['runs']
    for key in ('family', 'suite', 'status'):
        value = request.args.get(key)
        if value:
            runs = [r for r in runs if r[key] == value]
    document['runs'] = runs

    return jsonify({
        "status": "success",
        "run_id": run_id,
        "total_runs": len(runs),
        "report": document
    }), 200


@api_bp.route('/reports/<run_id>/summary', methods=['GET'])
def get_summary(run_id: str):
    """Per-family and per-suite status counts of a completed run.

    Returns:
        200 OK: Summary retrieved successfully
        404 Not Found: Run ID does not exist
    """
    if run_id not in verification_results:
        return jsonify({
            "status": "error",
            "error_message": f"Verification run '{run_id}' not found"
        }), 404

    result = verification_results[run_id]
    report = result['report']
    table = summary_frame(report)
    summary = [
        {"family": family, "suite": suite, **{status: int(count) for status, count in row.items()}}
        for (family, suite), row in table.iterrows()
    ]

    return jsonify({
        "status": "success",
        "run_id": run_id,
        "counts": report.counts(),
        "has_failures": report.has_failures,
        "execution_time_sec": result['execution_time'],
        "summary": summary
    }), 200


@api_bp.route('/families', methods=['GET'])
def list_families():
    """Describe the registered polynomial families.

    Returns:
        200 OK: Family descriptions in registry order
    """
    return jsonify({
        "status": "success",
        "families": [_family_info(tag) for tag in FAMILIES]
    }), 200


@api_bp.route('/health', methods=['GET'])
def health_check():
    """Health check endpoint.

    Returns:
        200 OK: Service is healthy
    """
    return jsonify({
        "status": "healthy",
        "service": "askey-verify",
        "version": "0.1.0"
    }), 200
