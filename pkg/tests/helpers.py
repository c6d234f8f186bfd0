from hypothesis import strategies as st

from whiskertype.core import build_context, random_artinian


def F(*names):
    """Face from names like '1_2' for x1_2."""
    return frozenset(tuple(int(t) for t in name.split("_")) for name in names)


def contexts(max_n=3, bmax=3, extra=4):
    return st.builds(
        lambda n, b, e, s: build_context(random_artinian(n, b, e, s)),
        st.integers(1, max_n), st.integers(1, bmax), st.integers(0, extra), st.integers(0, 10**6),
    )
