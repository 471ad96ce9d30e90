"""Block-sorting text compression with dictionary preprocessing.

Stages: Burrows-Wheeler transform, move-to-front, run-length and canonical
Huffman coding, plus a word-dictionary transform that runs ahead of them.
"""

from .bench import CorpusRun, compression_ratio, figure_series, render_report, run_corpus
from .bwt import DEFAULT_BLOCK_SIZE, BwtBlock, bwt_forward, bwt_inverse
from .dictionary import (Dictionary, Token, TokenKind, UnknownWordLog, build_dictionary,
                         codeword_for_index, dict_decode, dict_encode, load_dictionary,
                         save_dictionary, tokenize, update_dictionary)
from .errors import (CompressionError, ConfigurationError, CorruptStreamError, FormatError,
                     InvalidInputError, VerificationError, WrongDictionaryError)
from .huffman import HuffmanCodeTable, huffman_build, huffman_decode, huffman_encode
from .mtf import mtf_decode, mtf_encode
from .pipeline import Container, Method, PipelineSpec, compress, decompress, parse, serialize
from .rle import rle_decode, rle_encode

__version__ = "0.1.0"
