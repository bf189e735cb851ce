import pytest

from tropsplit import fixtures as fx
from tropsplit.serialize import decomposition_from_dict, graph_from_dict
from tropsplit.splitting import QuasiSplitGraph


@pytest.fixture(scope="session")
def square_plain():
    return decomposition_from_dict(fx.square_complex(split=()))


@pytest.fixture(scope="session")
def square_split():
    return decomposition_from_dict(fx.square_complex())


@pytest.fixture(scope="session")
def cube_split():
    return decomposition_from_dict(fx.cube_complex())


def graph(name):
    return graph_from_dict(fx.GRAPHS[name]())


def quasi(dec, top_name, split_order=None, partial=False):
    top_dict = fx.GRAPHS[top_name]()
    base_dict = fx.GRAPHS[top_dict["collapse"]["to_graph"]]()
    return QuasiSplitGraph(
        dec,
        graph_from_dict(base_dict),
        graph_from_dict(top_dict),
        top_dict["collapse"]["vertex_map"],
        split_order=split_order,
        partial=partial,
    )
