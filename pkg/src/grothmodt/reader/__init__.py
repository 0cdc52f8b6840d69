from ._base import Reader, InputItem, graph_item
from ._builder import BuilderReader
from ._edges import EdgeListReader
from ._matrix import MatrixReader
