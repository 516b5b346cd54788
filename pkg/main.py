"""Main Flask application entry point."""
import logging
from flask import Flask, jsonify
from flask_cors import CORS

from api.routes import api_bp
from src.askey.config import get_config


def create_app(config_name: str = None):
    """Create and configure Flask application.

    Args:
        config_name: Configuration profile (``default``, ``development``, ``testing``)

    Returns:
        Configured Flask app instance
    """
    app = Flask(__name__)
    settings = get_config(config_name)
    app.config['ASKEY_SETTINGS'] = settings
    app.config['TESTING'] = settings.__name__ == 'TestingConfig'

    # Configure logging
    logging.basicConfig(
        level=settings.LOG_LEVEL,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    # Enable CORS
    CORS(app)

    # Register blueprints
    app.register_blueprint(api_bp)

    @app.route('/')
    def index():
        """Service description listing the endpoints."""
        return jsonify({
            "service": "askey-verify",
            "description": "Exact verification of Christoffel-transform identities for Askey-scheme polynomials",
            "endpoints": {
                "GET /api/health": "Service health",
                "GET /api/families": "Registered families with their parameter slots",
                "POST /api/verify": "Run verification suites; returns the structured report",
                "GET /api/reports/<run_id>": "Stored report, filterable by family, suite and status",
                "GET /api/reports/<run_id>/summary": "Per-family and per-suite status counts",
            }
        })

    return app


if __name__ == '__main__':
    app = create_app()
    app.run(host='0.0.0.0', port=5001, debug=True)
