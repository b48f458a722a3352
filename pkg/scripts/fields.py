"""Fields shared by the experiment scripts."""

from zalpha.field import field_new, integer_field

FIELDS = {
    "Z": integer_field(),
    "sqrt2": field_new([-2, 0], (1, 2)),
    "cbrt2": field_new([-2, 0, 0], (1, 2)),
    "plastic": field_new([-1, -1, 0], (1, 2)),
    "quintic": field_new([-1, -1, 0, 0, 0], (1, 2)),
}
