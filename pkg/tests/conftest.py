from hypothesis import settings
from hypothesis import strategies as st

from idealgraph.rings import BlockSpec, RingSpec

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

# blocks that the element-level oracle can model, kept small enough to enumerate
CONCRETE_BLOCKS = [
    BlockSpec.field(2), BlockSpec.field(3), BlockSpec.field(5),
    BlockSpec.chain(2, 2), BlockSpec.chain(2, 3), BlockSpec.chain(3, 2),
    BlockSpec.vs(2, 2),
]

ALL_BLOCKS = CONCRETE_BLOCKS + [
    BlockSpec.field(4), BlockSpec.chain(2, 4), BlockSpec.chain(4, 2), BlockSpec.vs(3, 2),
]


def _small(blocks, max_elements=48):
    size = 1
    for b in blocks:
        size *= b.q ** (b.k if b.kind != "VSLocal" else b.d + 1)
    return size <= max_elements


concrete_specs = st.lists(st.sampled_from(CONCRETE_BLOCKS), min_size=1, max_size=3).filter(_small).map(
    lambda bs: RingSpec.of(*bs)
)

specs = st.lists(st.sampled_from(ALL_BLOCKS), min_size=1, max_size=3).map(lambda bs: RingSpec.of(*bs)).filter(
    lambda s: s.nontrivial_count <= 14
)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULT_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
