# chromapath — certifying digraph algorithms and verification campaigns
from chromapath.digraph import Digraph, parse_arclist, to_arclist
from chromapath.embedding import BlockPattern, PathEmbedding, check_embedding, two_block
from chromapath.coloring import VertexColoring, chromatic_number, is_proper
from chromapath.outforest import OutForest, maximal_closure
from chromapath.circuits import Circuit, k_good_circuit, strong_components
from chromapath.pathfind import CertifiedOutcome, find_p4, find_pattern, find_two_block_certified

__version__ = "0.1.0"

__all__ = [
    "Digraph", "parse_arclist", "to_arclist",
    "BlockPattern", "PathEmbedding", "check_embedding", "two_block",
    "VertexColoring", "chromatic_number", "is_proper",
    "OutForest", "maximal_closure",
    "Circuit", "k_good_circuit", "strong_components",
    "CertifiedOutcome", "find_p4", "find_pattern", "find_two_block_certified",
]
