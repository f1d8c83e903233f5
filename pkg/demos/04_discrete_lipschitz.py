"""
Nonexpansive objectives on a finite metric
==========================================

A finite metric space is uniformly discrete, and an objective that never drops
faster than the distance makes the induced order tight: x <= y exactly when the
drop equals the distance. Maximal points then exist above every start.
"""
from fangvp import MetricInstance, evpdlc_check, is_discrete, is_nonexpansive
from fangvp.rational import format_ext

path = ((0, 1, 2), (1, 0, 1), (2, 1, 0))

for phi in [(2, 1, 0), (1, 0, 0), (3, 1, 0)]:
    m = MetricInstance.from_matrix(path, phi)
    ok, radii = is_discrete(m)
    ne = is_nonexpansive(m)
    v = evpdlc_check(m)
    print(f"phi={phi}: discrete={ok} radii={[format_ext(r) for r in radii]} nonexpansive={bool(ne)}")
    print(f"  failed hypotheses: {v.info['failed_hypotheses']}")
    print(f"  maximal points: {v.info['maximal']}  cofinal map: {v.info['cofinal_witness']}")
