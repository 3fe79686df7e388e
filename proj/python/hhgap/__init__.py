"""Exact Hochschild (co)homology and smoothness certificates.

Thin convenience layer over the compiled extension: presentation handles stay
native, result payloads come back as plain dictionaries.
"""

import json

try:
    from . import _hhgap  # wheel layout
except ImportError:
    import _hhgap  # build-tree layout

Algebra = _hhgap.Algebra
bar_oracle = _hhgap.bar_oracle


def load(path):
    return Algebra.from_file(path)


def loads(text):
    return Algebra.from_string(text)


def hochschild_homology(algebra, max_degree=8, strategy="auto", internal_cap=12):
    return json.loads(
        _hhgap.hochschild_homology_json(
            algebra, max_degree, strategy, internal_cap, False
        )
    )


def hochschild_cohomology(algebra, max_degree=8, strategy="auto", internal_cap=12):
    return json.loads(
        _hhgap.hochschild_homology_json(
            algebra, max_degree, strategy, internal_cap, True
        )
    )


def smooth_check(algebra, max_degree=8, internal_cap=12):
    return json.loads(_hhgap.smooth_check_json(algebra, max_degree, internal_cap))


def deviations(algebra, internal_cap=12):
    return json.loads(_hhgap.deviations_json(algebra, internal_cap))


def is_p_closed(algebra, p=2, cutoff=8, internal_cap=12):
    return json.loads(_hhgap.is_p_closed_json(algebra, p, cutoff, internal_cap))


def ci_certificate(algebra, internal_cap=12):
    return json.loads(_hhgap.ci_certificate_json(algebra, internal_cap))
