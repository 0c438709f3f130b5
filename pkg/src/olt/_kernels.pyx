# cython: language_level=3, boundscheck=False, wraparound=False
"""GMP-backed multi-exponentiation kernels.

Python ints cross the boundary as hex strings; the exponentiation loop runs
without the GIL so column evaluations can proceed on several threads.
"""

from libc.stdlib cimport malloc, free

cdef extern from "gmp.h":
    ctypedef struct __mpz_struct:
        pass
    ctypedef __mpz_struct* mpz_ptr
    void mpz_init(mpz_ptr) nogil
    void mpz_clear(mpz_ptr) nogil
    int mpz_set_str(mpz_ptr, const char*, int)
    void mpz_set_ui(mpz_ptr, unsigned long) nogil
    char* mpz_get_str(char*, int, mpz_ptr)
    size_t mpz_sizeinbase(mpz_ptr, int)
    void mpz_powm(mpz_ptr, mpz_ptr, mpz_ptr, mpz_ptr) nogil
    void mpz_mul(mpz_ptr, mpz_ptr, mpz_ptr) nogil
    void mpz_mod(mpz_ptr, mpz_ptr, mpz_ptr) nogil


cdef int _load(mpz_ptr z, object x) except -1:
    if x < 0:
        raise ValueError("kernel operands must be non-negative")
    s = format(x, "x").encode("ascii")
    if mpz_set_str(z, s, 16) != 0:
        raise ValueError("could not convert operand")
    return 0


cdef object _dump(mpz_ptr z):
    cdef size_t size = mpz_sizeinbase(z, 16) + 2
    cdef char* buf = <char*>malloc(size)
    if buf == NULL:
        raise MemoryError()
    try:
        mpz_get_str(buf, 16, z)
        return int(buf.decode("ascii"), 16)
    finally:
        free(buf)


cdef __mpz_struct* _alloc(Py_ssize_t n) except NULL:
    cdef __mpz_struct* arr = <__mpz_struct*>malloc(max(n, 1) * sizeof(__mpz_struct))
    cdef Py_ssize_t i
    if arr == NULL:
        raise MemoryError()
    for i in range(n):
        mpz_init(&arr[i])
    return arr


cdef void _release(__mpz_struct* arr, Py_ssize_t n):
    cdef Py_ssize_t i
    for i in range(n):
        mpz_clear(&arr[i])
    free(arr)


cdef void _fold(__mpz_struct* a, __mpz_struct* b, __mpz_struct* e, Py_ssize_t n,
                mpz_ptr P, mpz_ptr A, mpz_ptr B, mpz_ptr t) nogil:
    cdef Py_ssize_t k
    mpz_set_ui(A, 1)
    mpz_set_ui(B, 1)
    for k in range(n):
        mpz_powm(t, &a[k], &e[k], P)
        mpz_mul(A, A, t)
        mpz_mod(A, A, P)
        mpz_powm(t, &b[k], &e[k], P)
        mpz_mul(B, B, t)
        mpz_mod(B, B, P)


def fold_pow_columns(as_, bs, columns, p):
    """Return ``[(prod a_k**e_k, prod b_k**e_k) mod p for e in columns]``."""
    cdef Py_ssize_t n = len(as_)
    cdef Py_ssize_t k
    if len(bs) != n:
        raise ValueError("a and b sequences differ in length")
    cdef __mpz_struct* a = _alloc(n)
    cdef __mpz_struct* b = _alloc(n)
    cdef __mpz_struct* e = _alloc(n)
    cdef __mpz_struct* scratch = _alloc(4)
    out = []
    try:
        _load(&scratch[0], p)
        for k in range(n):
            _load(&a[k], as_[k])
            _load(&b[k], bs[k])
        for col in columns:
            if len(col) != n:
                raise ValueError("exponent column has the wrong length")
            for k in range(n):
                _load(&e[k], col[k])
            with nogil:
                _fold(a, b, e, n, &scratch[0], &scratch[1], &scratch[2], &scratch[3])
            out.append((_dump(&scratch[1]), _dump(&scratch[2])))
    finally:
        _release(a, n)
        _release(b, n)
        _release(e, n)
        _release(scratch, 4)
    return out


def fold_pow(as_, bs, exps, p):
    """Return ``(prod a_k**e_k, prod b_k**e_k) mod p``."""
    return fold_pow_columns(as_, bs, [exps], p)[0]
