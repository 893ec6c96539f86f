"""HTTP JSON service.

The service is a thin shell over the same report builders the CLI uses,
so any endpoint result equals the corresponding command line output on
the same document.  Uploaded documents live in an in-memory registry
keyed by content hash; computed reports are cached per (hash, query).
Optionally serves a directory of static UI files at the root path.
"""

import json
import mimetypes
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path
from urllib.parse import parse_qs, urlparse

from .curves import minimal_ccv_general, minimum_ccv_1path, sample_cayley_curve
from .documents import (
    canonical_json,
    check_report,
    continuity_bound,
    curve_payload,
    document_hash,
    linkage_document,
    parse_linkage,
    path_payload,
    realization_payload,
    space_report,
    type_from_string,
)
from .errors import DomainError, LinkageError, NotOnePath, NotSupported, ParseError
from .graphs import construction_plan
from .motion import find_paths, paths_between_cayley_configs, sample_motion
from .realization import realize
from .spaces import elr_full

MAX_BODY = 4 * 1024 * 1024


class UnknownDocument(Exception):
    pass


class Registry:
    """Uploaded documents and memoized computations."""

    def __init__(self):
        self._lock = threading.Lock()
        self._docs = {}
        self._cache = {}

    def put(self, raw):
        linkage, base, labels = parse_linkage(raw)
        doc = linkage_document(linkage, base, labels)
        key = document_hash(doc)
        try:
            plan = construction_plan(linkage.graph, base)
        except LinkageError:
            plan = None
        with self._lock:
            self._docs[key] = (linkage, base, labels, plan)
        return key, linkage, base

    def get(self, key):
        with self._lock:
            try:
                return self._docs[key]
            except KeyError:
                raise UnknownDocument(key)

    def plan_of(self, key):
        linkage, base, _, plan = self.get(key)
        if plan is None:
            raise NotSupported("document %s is not tree-decomposable over its base" % key)
        return linkage, plan

    def cached(self, key, compute):
        with self._lock:
            if key in self._cache:
                return self._cache[key]
        value = compute()
        with self._lock:
            self._cache.setdefault(key, value)
            return self._cache[key]


def _query_float(params, name):
    try:
        return float(params[name][0])
    except (KeyError, IndexError, ValueError):
        raise ParseError("query parameter %r must be a number" % name)


def _query_str(params, name, default=None):
    values = params.get(name)
    if not values:
        if default is not None:
            return default
        raise ParseError("missing query parameter %r" % name)
    return values[0]


def _parse_endpoint_spec(value, field):
    """Accept both "7.2:-+-" strings and {"lf": 7.2, "sigma": "-+-"}."""
    if isinstance(value, str):
        head, sep, tail = value.partition(":")
        try:
            lf = float(head)
        except ValueError:
            raise ParseError("%s wants LF or LF:TYPE, got %r" % (field, value))
        return lf, type_from_string(tail) if sep else None
    if isinstance(value, dict) and isinstance(value.get("lf"), (int, float)):
        sigma = value.get("sigma")
        return float(value["lf"]), type_from_string(sigma) if sigma else None
    raise ParseError("%s wants LF, LF:TYPE, or {lf, sigma}" % field)


class Handler(BaseHTTPRequestHandler):
    registry = None
    assets = None
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):
        pass

    # -- plumbing ----------------------------------------------------------

    def _send_json(self, code, payload):
        body = canonical_json(payload).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _guarded(self, fn):
        try:
            fn()
        except ParseError as exc:
            payload = {"error": "ParseError", "message": str(exc)}
            if exc.context:
                payload["context"] = exc.context
            self._send_json(400, payload)
        except UnknownDocument as exc:
            self._send_json(404, {"error": "UnknownDocument", "message": str(exc)})
        except LinkageError as exc:
            self._send_json(422, {"error": type(exc).__name__, "message": str(exc)})

    def _read_body(self):
        length = int(self.headers.get("Content-Length") or 0)
        if length > MAX_BODY:
            raise ParseError("request body exceeds %d bytes" % MAX_BODY)
        raw = self.rfile.read(length)
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise ParseError("request body is not JSON: %s" % exc)

    # -- routes ------------------------------------------------------------

    def do_POST(self):
        url = urlparse(self.path)
        if url.path == "/linkage":
            self._guarded(self._post_linkage)
        elif url.path == "/motion":
            self._guarded(self._post_motion)
        else:
            self._send_json(404, {"error": "NotFound", "message": url.path})

    def do_GET(self):
        url = urlparse(self.path)
        params = parse_qs(url.query)
        routes = {
            "/space": self._get_space,
            "/realize": self._get_realize,
            "/curve": self._get_curve,
        }
        if url.path in routes:
            self._guarded(lambda: routes[url.path](params))
        else:
            self._serve_asset(url.path)

    def _post_linkage(self):
        length = int(self.headers.get("Content-Length") or 0)
        if length > MAX_BODY:
            raise ParseError("request body exceeds %d bytes" % MAX_BODY)
        raw = self.rfile.read(length)
        key, linkage, base = self.registry.put(raw)
        self._send_json(200, {"hash": key, "check": check_report(linkage, base)})

    def _get_space(self, params):
        key = _query_str(params, "doc")
        algo = _query_str(params, "algo", "elr")
        if algo not in ("elr", "qim"):
            raise ParseError("algo must be elr or qim, got %r" % algo)
        linkage, plan = self.registry.plan_of(key)
        report = self.registry.cached(
            (key, "space", algo), lambda: space_report(linkage, plan, algo=algo)
        )
        wanted = params.get("type")
        if wanted:
            keep = [t for t in report["types"] if t["sigma"] == wanted[0]]
            if not keep:
                raise DomainError("no step type %s in this space" % wanted[0])
            report = dict(report)
            report["types"] = keep
        self._send_json(200, report)

    def _get_realize(self, params):
        key = _query_str(params, "doc")
        lf = _query_float(params, "lf")
        sigma = type_from_string(_query_str(params, "sigma"))
        linkage, plan = self.registry.plan_of(key)
        real = realize(linkage, plan, lf, sigma=sigma)
        self._send_json(200, realization_payload(real, plan))

    def _post_motion(self):
        body = self._read_body()
        if not isinstance(body, dict):
            raise ParseError("motion request must be a JSON object")
        key = body.get("doc")
        if not isinstance(key, str):
            raise ParseError("motion request needs a 'doc' hash")
        linkage, plan = self.registry.plan_of(key)
        lf_a, sig_a = _parse_endpoint_spec(body.get("from"), "'from'")
        lf_b, sig_b = _parse_endpoint_spec(body.get("to"), "'to'")
        if (sig_a is None) != (sig_b is None):
            raise DomainError("'from' and 'to' must both carry a type, or neither")
        space = self.registry.cached((key, "elr-space"), lambda: elr_full(linkage, plan))
        if sig_a is None:
            paths = paths_between_cayley_configs(space, lf_a, lf_b)
        else:
            start = realize(linkage, plan, lf_a, sigma=sig_a)
            target = realize(linkage, plan, lf_b, sigma=sig_b)
            paths = find_paths(space, start, target)
        payload = {"paths": [path_payload(p) for p in paths]}
        animate = body.get("animate") or 0
        if animate and paths:
            if not isinstance(animate, int) or animate < 1:
                raise ParseError("'animate' must be a positive integer")
            frames = sample_motion(linkage, plan, paths[0], animate)
            payload["frames"] = [realization_payload(r, plan) for r in frames]
            payload["continuityBound"] = continuity_bound(payload["frames"])
        self._send_json(200, payload)

    def _get_curve(self, params):
        key = _query_str(params, "doc")
        resolution = int(_query_float(params, "resolution")) if "resolution" in params else 64
        if resolution < 2:
            raise ParseError("resolution must be at least 2")
        linkage, plan = self.registry.plan_of(key)

        def compute():
            try:
                ccv = minimum_ccv_1path(plan)
            except NotOnePath:
                ccv = minimal_ccv_general(plan.graph, plan.base)
            points = sample_cayley_curve(linkage, plan, ccv, resolution)
            return curve_payload(points, ccv)

        self._send_json(200, self.registry.cached((key, "curve", resolution), compute))

    # -- static files ------------------------------------------------------

    def _serve_asset(self, path):
        if self.assets is None:
            self._send_json(404, {"error": "NotFound", "message": path})
            return
        name = path.lstrip("/") or "index.html"
        root = Path(self.assets).resolve()
        target = (root / name).resolve()
        if root not in target.parents and target != root:
            self._send_json(404, {"error": "NotFound", "message": path})
            return
        if not target.is_file():
            self._send_json(404, {"error": "NotFound", "message": path})
            return
        body = target.read_bytes()
        ctype = mimetypes.guess_type(str(target))[0] or "application/octet-stream"
        self.send_response(200)
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)


def make_server(port=0, assets=None):
    handler = type(
        "BoundHandler", (Handler,), {"registry": Registry(), "assets": assets}
    )
    return ThreadingHTTPServer(("127.0.0.1", port), handler)


def serve(port=8420, assets=None):
    server = make_server(port=port, assets=assets)
    host, bound_port = server.server_address
    print("caylink service on http://%s:%d/" % (host, bound_port))
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
