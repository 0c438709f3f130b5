"""Oblivious lookup tables over homomorphic ElGamal."""

from .elgamal import Ciphertext, KeyPair, ct_mul, ct_pow, decrypt, encrypt, keygen, rerandomize
from .errors import (
    DimensionMismatch,
    DuplicateInput,
    FormatError,
    InvalidMessage,
    InvalidParams,
    NotClosed,
    OLTError,
    ParamsMismatch,
    SingularMatrix,
    TableTooLarge,
    UnknownInput,
)
from .group import (
    TEST_GROUP,
    GroupParams,
    counting,
    generate_params,
    named_group,
    pow_mod,
    random_scalar,
    validate_params,
)
from .table import (
    EncodedInput,
    FunctionSpec,
    LookupMatrix,
    SingleTable,
    build_lookup_matrix,
    build_single_table,
    encode,
    eval_chain,
    eval_single,
    plain_lookup,
)

__version__ = "0.1.0"
