from math import gcd

from hypothesis import strategies as st

words = st.text(alphabet="ab", min_size=1, max_size=40)


def coprime_pairs(max_n: int = 60):
    return (
        st.integers(min_value=2, max_value=max_n)
        .flatmap(
            lambda n: st.integers(min_value=1, max_value=n - 1)
            .filter(lambda p: gcd(p, n - p) == 1)
            .map(lambda p: (p, n - p))
        )
    )


compositions = st.lists(st.integers(min_value=1, max_value=5), min_size=1, max_size=5)
