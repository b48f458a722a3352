"""Test fields and hypothesis strategies."""

from hypothesis import strategies as st

from zalpha.field import field_new, integer_field

FIELD_SPECS = {
    "sqrt2": ([-2, 0], (1, 2)),
    "cbrt2": ([-2, 0, 0], (1, 2)),
    "plastic": ([-1, -1, 0], (1, 2)),
    "quintic": ([-1, -1, 0, 0, 0], (1, 2)),
}

FIELDS = {name: field_new(f, iv) for name, (f, iv) in FIELD_SPECS.items()}
SQRT2 = FIELDS["sqrt2"]
PLASTIC = FIELDS["plastic"]
Z = integer_field()
# small extra fields: negative root, rational interval endpoints, degree 4
EXTRA = {
    "neg_sqrt3": field_new([-3, 0], (-2, -1)),
    "x4-10x2+1": field_new([1, 0, -10, 0], (3, 4)),
    "x3-3x+1": field_new([1, -3, 0], ("1/3", "1/2")),
}
ALL_FIELDS = [Z, *FIELDS.values(), *EXTRA.values()]
SMALL_FIELDS = [F for F in ALL_FIELDS if F.degree <= 4]

fields = st.sampled_from(ALL_FIELDS)
small_fields = st.sampled_from(SMALL_FIELDS)


def coeff(bits):
    return st.integers(-(2**bits), 2**bits)


def elements(F, bits=64, nonzero=False):
    s = st.lists(coeff(bits), min_size=F.degree, max_size=F.degree).map(F.element)
    return s.filter(bool) if nonzero else s


def matrices(F, n, bits=8):
    return st.lists(
        st.lists(elements(F, bits), min_size=n, max_size=n).map(tuple), min_size=n, max_size=n
    ).map(tuple)
