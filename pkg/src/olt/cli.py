"""Command-line front end.

Every verb reads and writes the JSON formats of the library types and accepts
``--seed`` for reproducible runs.  Exit codes: 0 success, 1 failed check,
2 usage error, otherwise the ``exit_code`` of the raised :class:`OLTError`
(3 unreadable file, 4 params mismatch, 5 duplicate input, 6 not closed,
7 table too large, 8 dimension mismatch, 9 invalid message, 10 singular
matrix, 11 unknown input, 12 invalid params).
"""

from __future__ import annotations

import argparse
import json
import random
import secrets
import sys

from . import bench, kernels
from .elgamal import Ciphertext, KeyPair, decrypt, keygen, rerandomize
from .errors import FormatError, InvalidParams, OLTError, ParamsMismatch
from .group import NAMED_GROUPS, GroupParams, from_hex, generate_params, named_group, validate_params
from .linalg import power_row
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
)

EXIT_CHECK_FAILED = 1


def _rng(args):
    return random.Random(args.seed) if args.seed is not None else secrets.SystemRandom()


def _read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise FormatError(f"cannot read {path}: {exc}") from exc


def _write_json(path, obj):
    text = json.dumps(obj, indent=2) + "\n"
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _load_params(path) -> GroupParams:
    params = GroupParams.from_dict(_read_json(path))
    # full primality checks happen at generation time; loading stays cheap
    if params.p != 2 * params.q + 1 or not params.contains(params.g) or params.g == 1:
        raise InvalidParams(f"{path} does not describe a safe-prime subgroup")
    return params


def _load_pk(path, params) -> int:
    data = _read_json(path)
    try:
        pk = from_hex(data["pk"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"{path}: missing public key") from exc
    if not params.contains(pk):
        raise ParamsMismatch(f"{path}: public key is not in this group")
    return pk


def _load_keypair(path, params) -> KeyPair:
    data = _read_json(path)
    try:
        sk = from_hex(data["sk"])
    except (KeyError, TypeError) as exc:
        raise FormatError(f"{path}: missing secret key") from exc
    if not 1 <= sk < params.q:
        raise ParamsMismatch(f"{path}: secret key out of range for this group")
    kp = KeyPair.from_secret(sk, params)
    if "pk" in data and from_hex(data["pk"]) != kp.pk:
        raise ParamsMismatch(f"{path}: stored public key does not match g^sk")
    return kp


def _same_params(expected, got, what):
    if got is not None and got != expected:
        raise ParamsMismatch(f"{what} was made over a different group")


def cmd_gen_params(args):
    if args.named:
        params = named_group(args.named)
    else:
        params = generate_params(args.bits, _rng(args))
    if not validate_params(params):
        raise InvalidParams("generated parameters failed validation")
    _write_json(args.out, params.to_dict())
    return 0


def cmd_keygen(args):
    params = _load_params(args.params)
    kp = keygen(params, _rng(args))
    _write_json(args.sk_out, kp.secret_dict())
    _write_json(args.pk_out, kp.public_dict())
    return 0


def cmd_build(args):
    params = _load_params(args.params)
    spec = FunctionSpec.from_json(_read_json(args.spec))
    rng = _rng(args)
    if args.mode == "single":
        table = build_single_table(spec, params, rng, mix=not args.direct)
    else:
        table = build_lookup_matrix(spec, params, rng, mix=not args.direct)
    _write_json(args.out, table.to_json())
    return 0


def cmd_encode(args):
    params = _load_params(args.params)
    pk = _load_pk(args.pk, params)
    enc = encode(args.x, args.n, pk, params, _rng(args))
    _write_json(args.out, enc.to_json())
    return 0


def cmd_eval(args):
    params = _load_params(args.params)
    data = _read_json(args.table)
    table = LookupMatrix.from_json(data) if "columns" in data else SingleTable.from_json(data)
    _same_params(params, table.params, "table")
    enc = EncodedInput.from_json(_read_json(args.input))
    _same_params(params, enc.params, "encoded input")
    enc = EncodedInput(enc.cts, params)
    pk = _load_pk(args.pk, params) if args.pk else None
    if args.rerandomize and pk is None:
        raise FormatError("--rerandomize needs --pk")
    if isinstance(table, LookupMatrix):
        out = eval_chain(enc, table, pk, _rng(args), args.rerandomize).to_json()
    else:
        ct = eval_single(enc, table)
        if args.rerandomize:
            ct = rerandomize(ct, pk, params, _rng(args))
        out = ct.to_dict()
    _write_json(args.out, out)
    return 0


def cmd_check(args):
    params = _load_params(args.params)
    kp = _load_keypair(args.sk, params)
    data = _read_json(args.result)
    y = args.expected % params.q
    if "cts" in data:
        enc = EncodedInput.from_json(data)
        _same_params(params, enc.params, "result")
        cts = enc.cts
        exps = power_row(y, len(cts), params.q)
    else:
        cts = [Ciphertext.from_dict(data)]
        exps = [y]
    for k, (ct, e) in enumerate(zip(cts, exps)):
        if decrypt(ct, kp) != pow(params.g, e, params.p):
            print(f"olt: check failed at component {k + 1}", file=sys.stderr)
            return EXIT_CHECK_FAILED
    return 0


def cmd_bench(args):
    params = _load_params(args.params)
    with kernels.use_backend(args.backend):
        records = bench.run(params, args.n, args.reps, _rng(args), args.ops)
    if args.out in (None, "-"):
        bench.write_csv(records, sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            bench.write_csv(records, fh)
    return 0


def _int_list(text):
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _bits(text):
    bits = int(text)
    if bits < 16:
        raise argparse.ArgumentTypeError("bits must be at least 16")
    return bits


def _seed(text):
    seed = int(text, 10)
    if not 0 <= seed < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return seed


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, help="deterministic randomness (unsigned 64-bit decimal)")

    parser = argparse.ArgumentParser(prog="olt", description="Oblivious lookup tables over ElGamal.")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("gen-params", parents=[common], help="generate or select a safe-prime group")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--bits", type=_bits)
    src.add_argument("--named", choices=sorted(NAMED_GROUPS))
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_gen_params)

    p = sub.add_parser("keygen", parents=[common], help="create an ElGamal key pair")
    p.add_argument("--params", required=True)
    p.add_argument("--pk-out", required=True)
    p.add_argument("--sk-out", required=True)
    p.set_defaults(func=cmd_keygen)

    p = sub.add_parser("build", parents=[common], help="build a lookup table from a function spec")
    p.add_argument("--params", required=True)
    p.add_argument("--spec", required=True)
    p.add_argument("--mode", choices=["single", "matrix"], default="single")
    p.add_argument("--direct", action="store_true", help="solve with the Vandermonde matrix alone")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("encode", parents=[common], help="encrypt the power-vector encoding of x")
    p.add_argument("--params", required=True)
    p.add_argument("--pk", required=True)
    p.add_argument("--x", type=lambda s: int(s, 0), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("eval", parents=[common], help="evaluate a table on an encoded input")
    p.add_argument("--params", required=True)
    p.add_argument("--table", required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--pk")
    p.add_argument("--rerandomize", action="store_true")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", parents=[common], help="decrypt a result and compare with g^y")
    p.add_argument("--params", required=True)
    p.add_argument("--sk", required=True)
    p.add_argument("--result", required=True)
    p.add_argument("--expected", type=lambda s: int(s, 0), required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bench", parents=[common], help="measure exponentiation counts and wall time")
    p.add_argument("--params", required=True)
    p.add_argument("--n", type=_int_list, default=[1, 2, 4, 8, 16])
    p.add_argument("--reps", type=int, default=3)
    p.add_argument("--ops", type=lambda s: s.split(","), default=["eval_chain"])
    p.add_argument("--backend", choices=["auto", "compiled", "python"], default="auto")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OLTError as exc:
        print(f"olt: error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"olt: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
