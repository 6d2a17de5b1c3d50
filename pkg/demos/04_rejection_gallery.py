"""
Polynomials that are not Hilbert polynomials, and one that is anyway
====================================================================

Recovery either returns the unique generating partition or a structured
reason for rejection.  The gallery below shows the reasons; the coda
shows an innocent-looking polynomial whose partition has more parts than
atoms in the universe, which the run-length result handles in stride.
"""

from __future__ import annotations

from hilbert_lambda import (
    NotHilbert,
    Success,
    format_exponent_form,
    parse_polynomial,
    recover_delta,
)

rejects = [
    "x",            # negative constant residual after the linear block
    "2*x",          # same shape, scaled
    "x^2",          # wrong leading coefficient for its degree
    "x/2",          # non-integer values at integer points
    "-1",           # negative leading coefficient
    "x^2/2 + x/2 - 1",  # integer-valued, but a residual goes negative
]

for text in rejects:
    outcome = recover_delta(parse_polynomial(text))
    assert isinstance(outcome, NotHilbert)
    print(f"{text:>18}  ->  {outcome.reason.describe()}")

# the coda: 2*x^3 + 3 IS a Hilbert polynomial.  Its partition has 710772
# parts, and 9*x^5 decides to one with ~5e87 parts.  Run-length form
# keeps both answers a few tokens long.
print()
for text in ["2*x^3 + 3", "9*x^5"]:
    outcome = recover_delta(parse_polynomial(text))
    assert isinstance(outcome, Success)
    parts = sum(mult for _, mult in outcome.form.pairs)
    form_text = format_exponent_form(outcome.form)
    shown = form_text if len(form_text) <= 60 else form_text[:57] + "..."
    print(f"{text:>18}  ->  {shown}")
    print(f"{'':>18}      ({parts:.3e} parts in total)")
