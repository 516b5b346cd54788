"""Integration tests for Flask API endpoints."""
import pytest
import json
from main import create_app


@pytest.fixture
def client():
    """Create test client for Flask app."""
    app = create_app("testing")
    with app.test_client() as client:
        yield client


@pytest.fixture
def verify_request_data():
    """Small verification request over two oQM families."""
    return {
        "families": ["L", "He"],
        "suites": ["basic", "theorem8"],
        "n_max": 2,
        "bindings": [{"family": "L", "label": "unit", "values": {"g": "1"}}]
    }


class TestHealthEndpoint:
    """Tests for health check endpoint."""

    def test_health_check(self, client):
        """Test that health check endpoint returns 200."""
        response = client.get('/api/health')
        assert response.status_code == 200

        data = json.loads(response.data)
        assert data['status'] == 'healthy'
        assert data['service'] == 'askey-verify'

    def test_index(self, client):
        """Test that the root lists the endpoints."""
        response = client.get('/')
        assert response.status_code == 200
        assert "POST /api/verify" in json.loads(response.data)['endpoints']


class TestFamiliesEndpoint:
    """Tests for the family listing."""

    def test_lists_all_families(self, client):
        """Test that every family is described."""
        response = client.get('/api/families')
        assert response.status_code == 200

        data = json.loads(response.data)
        assert len(data['families']) == 18

    def test_family_fields(self, client):
        """Test the description of Laguerre."""
        data = json.loads(client.get('/api/families').data)
        laguerre = [f for f in data['families'] if f['tag'] == 'L'][0]

        assert laguerre['mechanics'] == 'oQM'
        assert laguerre['m'] == 1
        assert laguerre['delta'] == ['1']
        assert laguerre['slots'][0]['name'] == 'g'
        assert laguerre['uses_q'] is False


class TestVerifyEndpoint:
    """Tests for verification endpoint."""

    def test_verify_success(self, client, verify_request_data):
        """Test a successful verification run."""
        response = client.post(
            '/api/verify',
            data=json.dumps(verify_request_data),
            content_type='application/json'
        )

        assert response.status_code == 200
        data = json.loads(response.data)
        assert data['status'] == 'success'
        assert data['run_id'].startswith('verify_run_')
        assert data['counts']['fail'] == 0
        assert data['report']['spec']['families'] == ['L', 'He']

    def test_verify_no_data(self, client):
        """Test verification with no data."""
        response = client.post('/api/verify', data='', content_type='application/json')
        assert response.status_code == 400

    def test_verify_schema_error(self, client):
        """Test that a wrongly typed field is rejected."""
        response = client.post(
            '/api/verify',
            data=json.dumps({"families": "L", "suites": ["basic"]}),
            content_type='application/json'
        )

        assert response.status_code == 400
        assert json.loads(response.data)['status'] == 'validation_error'

    def test_verify_unknown_suite(self, client):
        """Test that unknown suites are reported."""
        response = client.post(
            '/api/verify',
            data=json.dumps({"families": ["L"], "suites": ["fuzz"]}),
            content_type='application/json'
        )

        assert response.status_code == 400
        data = json.loads(response.data)
        assert any("unknown suites" in err for err in data['errors'])

    def test_verify_closure_violation(self, client):
        """Test that a binding not closed under conjugation is rejected."""
        request_data = {
            "families": ["W"],
            "suites": ["basic"],
            "bindings": [{"family": "W", "values": {"a1": "1/2+1/3i", "a2": "1/2", "a3": "2/3", "a4": "1/4"}}]
        }
        response = client.post('/api/verify', data=json.dumps(request_data), content_type='application/json')

        assert response.status_code == 400
        assert any("[W]" in err for err in json.loads(response.data)['errors'])

    def test_verify_mutation_reports_failures(self, client):
        """Test that mutation runs still return 200 with failures counted."""
        request_data = {"families": ["L"], "suites": ["theorem8"], "n_max": 2, "mutate": True}
        response = client.post('/api/verify', data=json.dumps(request_data), content_type='application/json')

        assert response.status_code == 200
        assert json.loads(response.data)['counts']['fail'] > 0


class TestReportEndpoints:
    """Tests for stored reports."""

    def _run(self, client, request_data):
        response = client.post('/api/verify', data=json.dumps(request_data), content_type='application/json')
        return json.loads(response.data)['run_id']

    def test_get_report(self, client, verify_request_data):
        """Test retrieving a stored report."""
        run_id = self._run(client, verify_request_data)
        response = client.get(f'/api/reports/{run_id}')

        assert response.status_code == 200
        data = json.loads(response.data)
        assert data['run_id'] == run_id
        assert data['total_runs'] == len(data['report']['runs'])

    def test_filter_by_family(self, client, verify_request_data):
        """Test the family filter."""
        run_id = self._run(client, verify_request_data)
        data = json.loads(client.get(f'/api/reports/{run_id}?family=He').data)

        assert data['total_runs'] > 0
        assert all(r['family'] == 'He' for r in data['report']['runs'])

    def test_summary(self, client, verify_request_data):
        """Test the per-family summary."""
        run_id = self._run(client, verify_request_data)
        response = client.get(f'/api/reports/{run_id}/summary')

        assert response.status_code == 200
        data = json.loads(response.data)
        assert data['has_failures'] is False
        assert {row['family'] for row in data['summary']} == {'L', 'He'}

    def test_unknown_run(self, client):
        """Test that unknown run IDs return 404."""
        assert client.get('/api/reports/verify_run_missing').status_code == 404
        assert client.get('/api/reports/verify_run_missing/summary').status_code == 404
