"""
Flask API for hypergraph distribution discriminators

Exposes the library over JSON so instances can be evaluated without the
command line. Request bodies use the same objects as the instance files
(see json_object_format.md):
  - "class": a distinguishing class
  - "p1", "p2": distributions
  - "s1", "s2", "h1", "h2": samples

All endpoints return JSON and support CORS.
Runs on localhost:8080 during development.

Routes:
  POST /api/ipm                 → exact IPM and witness graph
  POST /api/gvc                 → graph VC dimension with witness
  POST /api/discriminate        → ERM discriminator on two samples
  POST /api/test-closeness      → closeness tester verdict
  GET  /api/vandermonde         → spectrum and grid-dominance checks
  GET  /api/construct/<mode>    → collision, subset graphs, disjoint or hard pairs
"""
import logging

from flask import Flask, jsonify, request
from flask_cors import CORS

try: # relative import if run as module
    from .capacity_feature.vc import graph_vc_dim
    from .discrimination_feature.erm import erm_discriminate
    from .discrimination_feature.tester import closeness_test
    from .instance_io import parse_class, parse_distribution, parse_sample
    from .metrics_feature.ipm import ipm_exact
    from .services import construct_payload, draw_pair, vandermonde_payload
except ImportError: # absolute import if run as script
    from Discriminators.capacity_feature.vc import graph_vc_dim
    from Discriminators.discrimination_feature.erm import erm_discriminate
    from Discriminators.discrimination_feature.tester import closeness_test
    from Discriminators.instance_io import parse_class, parse_distribution, parse_sample
    from Discriminators.metrics_feature.ipm import ipm_exact
    from Discriminators.services import construct_payload, draw_pair, vandermonde_payload

logger = logging.getLogger(__name__)

app = Flask(__name__)
cors = CORS(app, origins="*")


def _body() -> dict:
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        raise ValueError("request body must be a JSON object")
    return data


def _error(e: Exception):
    if isinstance(e, (ValueError, KeyError)):
        return jsonify({"error": str(e)}), 400
    logger.exception("request failed")
    return jsonify({"error": str(e)}), 500


"""
POST /api/ipm

Computes IPM_C(p1, p2) exactly.

Body:
  - class (object): distinguishing class
  - p1, p2 (object): distributions on the class universe

Returns:
  {"value", "witness", "per_graph_gaps"}; exact values come back as "a/b" strings.
"""
@app.route("/api/ipm", methods=["POST"])
def ipm():
    try:
        data = _body()
        c = parse_class(data["class"])
        p1 = parse_distribution(data["p1"], c.universe)
        p2 = parse_distribution(data["p2"], c.universe)
        return jsonify(ipm_exact(c, p1, p2).to_dict())
    except Exception as e:
        return _error(e)


"""
POST /api/gvc

Body:
  - class (object): distinguishing class

Returns:
  {"dimension", "witness", "pins"}
"""
@app.route("/api/gvc", methods=["POST"])
def gvc():
    try:
        c = parse_class(_body()["class"])
        return jsonify(graph_vc_dim(c).to_dict())
    except Exception as e:
        return _error(e)


"""
POST /api/discriminate

Runs empirical risk minimization over the class.

Body:
  - class (object)
  - s1, s2 (object): samples, or
  - p1, p2 (object) with m (int) and seed (int, default 0) to draw them

Returns:
  The chosen graph, its index and the empirical gap (plus the true gap when
  distributions were given).
"""
@app.route("/api/discriminate", methods=["POST"])
def discriminate():
    try:
        data = _body()
        c = parse_class(data["class"])
        p1 = p2 = None
        if "s1" in data and "s2" in data:
            s1 = parse_sample(data["s1"], c.universe)
            s2 = parse_sample(data["s2"], c.universe)
        else:
            p1 = parse_distribution(data["p1"], c.universe)
            p2 = parse_distribution(data["p2"], c.universe)
            s1, s2 = draw_pair(p1, p2, int(data["m"]), int(data.get("seed", 0)))
        return jsonify(erm_discriminate(c, s1, s2, p1, p2).to_dict())
    except Exception as e:
        return _error(e)


"""
POST /api/test-closeness

Body:
  - class (object)
  - s1, s2 (object): training samples
  - h1, h2 (object): fresh holdout samples
  - epsilon (number)

Returns:
  {"verdict": "EQUIVALENT" | "DISTINCT", "witness_gap", "threshold", "graph_index", "runs"}
"""
@app.route("/api/test-closeness", methods=["POST"])
def test_closeness():
    try:
        data = _body()
        c = parse_class(data["class"])
        samples = [parse_sample(data[key], c.universe) for key in ("s1", "s2", "h1", "h2")]
        verdict = closeness_test(c, *samples, float(data["epsilon"]))
        return jsonify(verdict.to_dict())
    except Exception as e:
        return _error(e)


"""
GET /api/vandermonde

Query Params:
  - k (int): grid resolution, 1..12
  - trials (int): random grid-dominance polynomials (default 100)
  - seed (int): default 0

Returns:
  The spectrum report, grid-dominance tally and an overall "holds" flag.
"""
@app.route("/api/vandermonde", methods=["GET"])
def vandermonde():
    try:
        k = request.args.get("k", type=int)
        if k is None:
            raise ValueError("query parameter k is required")
        trials = request.args.get("trials", default=100, type=int)
        seed = request.args.get("seed", default=0, type=int)
        payload, holds = vandermonde_payload(k, trials, seed)
        return jsonify({**payload, "holds": holds})
    except Exception as e:
        return _error(e)


"""
GET /api/construct/<mode>

Path:
  - mode: collision | subset-graph | subset-hypergraph | disjoint-pair | hard-pair

Query Params:
  - ell, k, n (int); epsilon (float); seed (int)
  - method: game | sampling
  - adversary: singletons | thresholds | power-set

Returns:
  The construction as instance-file JSON.
"""
@app.route("/api/construct/<mode>", methods=["GET"])
def construct(mode):
    try:
        args = request.args
        payload = construct_payload(
            mode,
            ell=args.get("ell", default=4, type=int),
            k=args.get("k", default=2, type=int),
            epsilon=args.get("epsilon", default=0.2, type=float),
            seed=args.get("seed", default=0, type=int),
            method=args.get("method", default="game"),
            adversary=args.get("adversary", default="singletons"),
            n=args.get("n", default=None, type=int),
        )
        return jsonify(payload)
    except Exception as e:
        return _error(e)


"""
Development entry point.

Runs the Flask application on localhost:8080 with debug mode enabled.
"""
if __name__ == "__main__":
    app.run(debug=True, port=8080)
