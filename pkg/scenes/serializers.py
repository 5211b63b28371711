"""
JSON payloads and aligned-text views for command output.

JSON is canonical (sorted keys, fixed indentation) so identical input gives
identical bytes. The text views are for reading only.
"""

import json


def canonical_json(value):
    return json.dumps(value, sort_keys=True, indent=2, ensure_ascii=False)


def hom_basis(field, homs):
    return [[field.to_json(x) for x in h.as_vector()] for h in homs]


def resolution_payload(resolution, certificate, catalogue):
    payload = resolution.as_dict()
    payload['generators'] = [[catalogue[label].gamma for label in labels] for labels in resolution.labels]
    payload['ranks'] = resolution.ranks()
    payload['certificate'] = certificate.as_dict()
    return payload


def _table(header, rows):
    widths = [max(len(str(r[i])) for r in [header, *rows]) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines.extend("  ".join(str(c).ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows)
    return lines


def report_lines(reports):
    lines = []
    for report in reports:
        status = "ok" if report['valid'] else f"{len(report['violations'])} violation(s)"
        lines.append(f"{report['subject']}: {status}")
        lines.extend(f"  [{v['code']}] {v['message']}" for v in report['violations'])
    return lines


def betti_lines(payload):
    labels = sorted({label for stage in payload['betti'] for label in stage})
    rows = [[k, *[stage.get(label, 0) for label in labels]] for k, stage in enumerate(payload['betti'])]
    lines = [f"minimal resolution of {payload['module']}"]
    lines.extend(_table(["k", *labels], rows))
    cert = payload['certificate']
    lines.append(f"terminated: {payload['terminated']}  verified: {cert['passed']}")
    if not cert['passed']:
        lines.append(f"first failure: {cert['failure']} at stage {cert['stage']}")
    return lines


def radical_lines(payload):
    lines = []
    for name, ideal in payload.items():
        cert = ideal.get('certificate', {})
        lines.append(
            f"{name}: dim J = {ideal['dim']} of {ideal['ambient_dim']}"
            + (f", nilpotency index {cert['nilpotency_index']}" if cert else "")
        )
    return lines


def verdict_lines(payload):
    rows = [
        [arrow, c['ring_dim'], c['radical_dim'], c['nilpotency_index'], c['split'], c['idempotents']]
        for arrow, c in payload['per_arrow'].items()
    ]
    lines = [f"verdict: {payload['verdict']} ({payload['criterion']})", payload['reason'], ""]
    lines.extend(_table(["arrow", "dim", "dim J", "index", "split", "idempotents"], rows))
    return lines


def search_lines(payload):
    lines = [
        f"window radius {payload['d']} over {payload['field']}: "
        f"{payload['admissible']} admissible idempotents ({payload['parameters']} coefficients)",
        f"diagonal idempotent: {payload['diagonal_ok']}  reaching the edge: {payload['reaching_edge']}",
        f"interior minimum in I: {payload['interior_minimal']}  empty I: {payload['empty_support']}",
        f"shortest longest descent: {payload['min_max_depth']}",
        "descent confirmed" if payload['confirms_descent'] else "descent NOT confirmed",
    ]
    if payload['restricted_admissible'] is not None:
        lines.append(
            f"restricted to radius {payload['d'] - 1}: {payload['restricted_admissible']} of "
            f"{payload['admissible']} stay admissible"
        )
    rows = [[support, count] for support, count in sorted(payload['supports'].items())]
    lines.append("")
    lines.extend(_table(["I", "count"], rows))
    return lines


def hom_lines(payload):
    lines = [f"dim Hom({payload['source']}, {payload['target']}) = {payload['dim']}"]
    adjunction = payload.get('adjunction')
    if adjunction:
        lines.append(
            f"adjunction: dim {payload['target']}_{adjunction['arrow']} = {adjunction['expected']}"
            f" ({'ok' if adjunction['holds'] else 'MISMATCH'})"
        )
    return lines
