import re

from utils.exceptions import InvalidInputError

_CLASSICAL = re.compile(r"^(SU|U|SO|Sp)_\{?(\d+)\}?$")

EXCEPTIONAL_BOUNDS = {
    "G2": 5,
    "F4": 11,
    "E6": 11,
    "E7": 17,
    "E8": 29,
}


def uniton_bound(group_label: str) -> int:
    """Upper bound on the uniton number of harmonic two-spheres in the group"""
    label = group_label.strip()
    compact = label.replace("_", "").replace("{", "").replace("}", "")
    if compact in EXCEPTIONAL_BOUNDS:
        return EXCEPTIONAL_BOUNDS[compact]

    match = _CLASSICAL.match(label)
    if match is None:
        raise InvalidInputError(f"Unknown group label {group_label!r}")
    family, size = match.group(1), int(match.group(2))

    if family in ("SU", "U"):
        if size < 1:
            raise InvalidInputError(f"{group_label}: size must be at least 1")
        return size - 1
    if family == "Sp":
        if size < 1:
            raise InvalidInputError(f"{group_label}: size must be at least 1")
        return 2 * size - 1

    # SO_m: m = 2n+1 gives 2n-1, m = 2n gives 2n-3
    if size % 2 == 1:
        if size < 3:
            raise InvalidInputError(f"{group_label}: SO_(2n+1) needs n >= 1")
        return size - 2
    if size < 4:
        raise InvalidInputError(f"{group_label}: SO_(2n) needs n >= 2")
    return size - 3
