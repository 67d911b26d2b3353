"""
Finite fields F_{p^n} with deterministic representations.

An element of F_{p^n} = F_p[t]/(modulus) is stored as the integer encoding
of its coefficient vector, ``sum(c_i * p**i)`` (constant term least
significant). Multiplication, inversion and powers go through discrete
logarithm tables relative to the canonically least primitive element, and
addition in odd characteristic through a Zech logarithm table. All tables are
built once per (p, n) with numpy and shared by every element of the field.
"""
import logging
import threading

import numpy as np

from abelzeta.options import resolve_budget
from abelzeta.utils import check_budget
from abelzeta.utils.exceptions import FieldMismatchError, InvariantBreachError
from abelzeta.utils.numbers import is_prime, prime_factors

logger = logging.getLogger(__name__)

# Scalar operations index plain python lists, which is several times faster
# than indexing numpy arrays element by element.
_LIST_TABLE_LIMIT = 2 ** 22
_CHUNK_SIZE = 2 ** 16


class FieldCtx:
    """The context of the finite field F_{p^n}: its canonical modulus and the
    arithmetic tables shared by all of its elements.

    Notes
    -----
    Contexts are only created through :func:`field_ctx`, which memoizes them,
    so that two contexts for the same (p, n) are the same object.
    """

    @property
    def p(self):
        """int: The characteristic."""
        return self._p

    @property
    def n(self):
        """int: The degree over the prime field."""
        return self._n

    @property
    def order(self):
        """int: The number of elements, q = p^n."""
        return self._order

    @property
    def modulus_coefficients(self):
        """tuple of int: The coefficients (constant term first) over F_p of the
        canonical modulus. For n = 1 this is the identity representation ``t``."""
        return self._modulus_coefficients

    @property
    def modulus(self):
        """Poly: The canonical modulus as a polynomial over the prime field."""
        from abelzeta.algebra.polynomials import Poly

        return Poly(field_ctx(self._p, 1), self._modulus_coefficients)

    @property
    def generator(self):
        """int: The encoding of the least primitive element, the base of all
        discrete logarithms in this context."""
        return self._generator

    @property
    def exp_table(self):
        """numpy.ndarray: ``exp_table[k]`` is the encoding of generator^k for
        0 <= k < 2(q - 1)."""
        return self._exp

    @property
    def log_table(self):
        """numpy.ndarray: The discrete logarithm of every encoding, with -1
        stored for zero."""
        return self._log

    def __init__(self, p, n, modulus_coefficients, generator, exp_table, log_table):

        self._p = p
        self._n = n
        self._order = p ** n
        self._modulus_coefficients = tuple(modulus_coefficients)
        self._generator = generator

        self._exp = np.concatenate([exp_table, exp_table])
        self._log = log_table

        self._zech = None

        if p != 2 and n > 1:

            lowest_digit = exp_table % p
            one_plus = np.where(
                lowest_digit == p - 1, exp_table - (p - 1), exp_table + 1
            )
            self._zech = log_table[one_plus]

        self._powers_of_p = np.array([p ** i for i in range(n)], dtype=np.int64)

        use_lists = self._order <= _LIST_TABLE_LIMIT

        self._exp_s = self._exp.tolist() if use_lists else self._exp
        self._log_s = self._log.tolist() if use_lists else self._log
        self._zech_s = (
            None
            if self._zech is None
            else (self._zech.tolist() if use_lists else self._zech)
        )

        self._trace_of_basis = tuple(
            self.trace_to_prime(self._powers_of_p[i].item()) for i in range(n)
        )

    # Scalar arithmetic on encodings.

    def check(self, value):
        """Raise a `ValueError` if `value` is not the encoding of an element."""
        if not 0 <= value < self._order:
            raise ValueError(f"{value} does not encode an element of F_{self._order}.")

    def from_int(self, value):
        """int: The encoding of the image of an integer in the prime field."""
        return value % self._p

    def digits(self, value):
        """tuple of int: The coefficient vector (constant term first) of an
        encoded element."""
        coefficients = []

        for _ in range(self._n):
            value, digit = divmod(value, self._p)
            coefficients.append(digit)

        return tuple(coefficients)

    def from_digits(self, coefficients):
        """int: The encoding of the element with the given coefficient vector."""
        if len(coefficients) > self._n:
            raise ValueError(f"At most {self._n} coefficients are allowed.")

        return sum((c % self._p) * self._p ** i for i, c in enumerate(coefficients))

    def log(self, value):
        """int: The discrete logarithm of a nonzero element."""
        if value == 0:
            raise ZeroDivisionError("Zero has no discrete logarithm.")
        return int(self._log_s[value])

    def add(self, a, b):

        if self._p == 2:
            return a ^ b
        if self._n == 1:
            return (a + b) % self._p
        if a == 0:
            return b
        if b == 0:
            return a

        log_a = self._log_s[a]
        zech = self._zech_s[(self._log_s[b] - log_a) % (self._order - 1)]

        if zech < 0:
            return 0

        return int(self._exp_s[log_a + zech])

    def neg(self, a):

        if self._p == 2 or a == 0:
            return a
        if self._n == 1:
            return self._p - a

        return int(self._exp_s[self._log_s[a] + (self._order - 1) // 2])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):

        if a == 0 or b == 0:
            return 0

        return int(self._exp_s[self._log_s[a] + self._log_s[b]])

    def inv(self, a):

        if a == 0:
            raise ZeroDivisionError("Zero is not invertible.")

        return int(self._exp_s[(-self._log_s[a]) % (self._order - 1)])

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, exponent):
        """The power a^exponent for any integer exponent, reduced through the
        discrete logarithm modulo q - 1."""

        if a == 0:

            if exponent < 0:
                raise ZeroDivisionError("Zero is not invertible.")

            return 1 if exponent == 0 else 0

        return int(self._exp_s[(self._log_s[a] * exponent) % (self._order - 1)])

    def frobenius(self, a, power=1):
        """The iterated Frobenius image a^(p^power)."""
        return self.pow(a, self._p ** (power % self._n))

    def trace_to_prime(self, a):
        """The absolute trace sum_{i < n} a^(p^i), an element of the prime field.

        Parameters
        ----------
        a: int
            The encoding of the element.

        Returns
        -------
        int
            The trace, which is always below p.
        """
        total = 0

        for i in range(self._n):
            total = self.add(total, self.frobenius(a, i))

        if total >= self._p:
            raise InvariantBreachError(
                "trace", f"The trace of {a} in F_{self._order} left the prime field."
            )

        return total

    def element(self, value):
        """FieldElement: The element with the given encoding."""
        return FieldElement(self, value)

    def elements(self):
        """numpy.ndarray: The encodings of every element, in ascending order."""
        return np.arange(self._order, dtype=np.int64)

    def random_element(self, rng, nonzero=False):
        """FieldElement: A uniformly drawn element.

        Parameters
        ----------
        rng: numpy.random.Generator
            The random source.
        nonzero: bool
            Whether to exclude zero.
        """
        low = 1 if nonzero else 0
        return FieldElement(self, int(rng.integers(low, self._order)))

    # Vectorized arithmetic on arrays of encodings.

    def mul_arrays(self, a, b):

        a, b = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))

        result = np.zeros(a.shape, dtype=np.int64)
        nonzero = (a != 0) & (b != 0)

        result[nonzero] = self._exp[self._log[a[nonzero]] + self._log[b[nonzero]]]
        return result

    def add_arrays(self, a, b):

        a, b = np.broadcast_arrays(np.asarray(a, np.int64), np.asarray(b, np.int64))

        if self._p == 2:
            return np.bitwise_xor(a, b)
        if self._n == 1:
            return (a + b) % self._p

        result = np.where(a == 0, b, a).astype(np.int64)
        both = (a != 0) & (b != 0)

        log_a = self._log[a[both]]
        zech = self._zech[(self._log[b[both]] - log_a) % (self._order - 1)]

        result[both] = np.where(
            zech < 0, 0, self._exp[log_a + np.maximum(zech, 0)]
        )
        return result

    def pow_arrays(self, a, exponent):

        a = np.asarray(a, np.int64)
        result = np.zeros(a.shape, dtype=np.int64)

        nonzero = a != 0
        reduced = exponent % (self._order - 1)

        logs = (self._log[a[nonzero]] * reduced) % (self._order - 1)
        result[nonzero] = self._exp[logs]

        if exponent == 0:
            result[~nonzero] = 1

        return result

    def evaluate_everywhere(self, coefficients, points=None):
        """Evaluates a polynomial with coefficients in this field at many
        points at once using Horner's rule.

        Parameters
        ----------
        coefficients: sequence of int
            The encodings of the coefficients, constant term first.
        points: numpy.ndarray, optional
            The points to evaluate at. Defaults to every element of the field.

        Returns
        -------
        numpy.ndarray
            The encoded values.
        """
        if points is None:
            points = self.elements()

        values = np.zeros(np.shape(points), dtype=np.int64)

        for coefficient in reversed(coefficients):
            values = self.add_arrays(self.mul_arrays(values, points), coefficient)

        return values

    def digit_arrays(self, values):
        """numpy.ndarray: The coefficient vectors of many encodings, one row
        per value."""
        values = np.asarray(values, np.int64)
        return (values[..., None] // self._powers_of_p) % self._p

    def trace_arrays(self, values):
        """The absolute trace of many encodings at once, using that the trace
        is F_p-linear in the coefficient vector."""
        return (
            self.digit_arrays(values) @ np.array(self._trace_of_basis, dtype=np.int64)
        ) % self._p

    def __repr__(self):
        return f"FieldCtx(p={self._p}, n={self._n})"

    def __reduce__(self):
        # Contexts are singletons, so pickling (e.g. when handing work to a
        # dask worker process) re-resolves through the memoized constructor.
        return field_ctx, (self._p, self._n)


class FieldElement:
    """An element of a finite field together with its context."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx, value):
        """
        Parameters
        ----------
        ctx: FieldCtx
            The field the element belongs to.
        value: int
            The encoding of the element.
        """
        ctx.check(value)

        self.ctx = ctx
        self.value = int(value)

    @property
    def coefficients(self):
        """tuple of int: The coefficient vector over F_p, constant term first."""
        return self.ctx.digits(self.value)

    @property
    def is_zero(self):
        return self.value == 0

    def _coerce(self, other):

        if isinstance(other, FieldElement):

            if other.ctx is not self.ctx:
                raise FieldMismatchError(
                    f"Cannot combine elements of {self.ctx} and {other.ctx}."
                )

            return other.value

        if isinstance(other, int) and not isinstance(other, bool):
            return self.ctx.from_int(other)

        return NotImplemented

    def _binary(self, other, operation, reflected=False):

        other_value = self._coerce(other)

        if other_value is NotImplemented:
            return NotImplemented

        if reflected:
            return FieldElement(self.ctx, operation(other_value, self.value))

        return FieldElement(self.ctx, operation(self.value, other_value))

    def __add__(self, other):
        return self._binary(other, self.ctx.add)

    def __radd__(self, other):
        return self._binary(other, self.ctx.add, True)

    def __sub__(self, other):
        return self._binary(other, self.ctx.sub)

    def __rsub__(self, other):
        return self._binary(other, self.ctx.sub, True)

    def __mul__(self, other):
        return self._binary(other, self.ctx.mul)

    def __rmul__(self, other):
        return self._binary(other, self.ctx.mul, True)

    def __truediv__(self, other):
        return self._binary(other, self.ctx.div)

    def __rtruediv__(self, other):
        return self._binary(other, self.ctx.div, True)

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, exponent):

        if not isinstance(exponent, int):
            return NotImplemented

        return FieldElement(self.ctx, self.ctx.pow(self.value, exponent))

    def inverse(self):
        return FieldElement(self.ctx, self.ctx.inv(self.value))

    def frobenius(self, power=1):
        """FieldElement: The image under the power-th iterate of a -> a^p."""
        return FieldElement(self.ctx, self.ctx.frobenius(self.value, power))

    def trace_to_prime(self):
        """FieldElement: The absolute trace, an element of the prime field
        (encoded in this same context)."""
        return FieldElement(self.ctx, self.ctx.trace_to_prime(self.value))

    def __eq__(self, other):

        other_value = self._coerce(other)

        if other_value is NotImplemented:
            return False

        return self.value == other_value

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self.ctx.p, self.ctx.n, self.value))

    def __bool__(self):
        return self.value != 0

    def __str__(self):

        terms = []

        for power, coefficient in reversed(list(enumerate(self.coefficients))):

            if coefficient == 0:
                continue

            monomial = "" if power == 0 else ("t" if power == 1 else f"t^{power}")

            if monomial == "":
                terms.append(str(coefficient))
            elif coefficient == 1:
                terms.append(monomial)
            else:
                terms.append(f"{coefficient}*{monomial}")

        return "+".join(terms) if len(terms) > 0 else "0"

    def __repr__(self):
        return f"FieldElement({self}, F_{self.ctx.order})"


_contexts = {}
_contexts_lock = threading.RLock()


def canonical_modulus(p, n):
    """Returns the canonical modulus of F_{p^n}: the first monic irreducible
    polynomial of degree n over F_p when monic polynomials are ordered by the
    integer encoding of their coefficient vectors (constant term least
    significant). For n = 1 the identity representation ``t`` is used.

    Parameters
    ----------
    p: int
        The characteristic.
    n: int
        The degree.

    Returns
    -------
    tuple of int
        The coefficients, constant term first.
    """
    from abelzeta.algebra.polynomials import Poly, is_irreducible

    if n == 1:
        return (0, 1)

    prime_field = field_ctx(p, 1)

    for tail in range(p ** n):

        coefficients = list(_prime_field_digits(p, tail, n)) + [1]

        if is_irreducible(Poly(prime_field, coefficients)):
            return tuple(coefficients)

    raise InvariantBreachError(
        "canonical-modulus", f"No irreducible polynomial of degree {n} over F_{p}."
    )


def _prime_field_digits(p, value, length):

    digits = []

    for _ in range(length):
        value, digit = divmod(value, p)
        digits.append(digit)

    return tuple(digits)


def _find_generator(p, n, modulus_coefficients):
    """Returns the encoding of the least primitive element of
    F_p[t]/(modulus)."""
    from abelzeta.algebra.polynomials import Poly

    order = p ** n
    factors = prime_factors(order - 1) if order > 2 else ()

    if n == 1:

        for candidate in range(1, p):

            if all(pow(candidate, (order - 1) // f, p) != 1 for f in factors):
                return candidate

    else:

        prime_field = field_ctx(p, 1)
        modulus = Poly(prime_field, modulus_coefficients)

        for candidate in range(1, order):

            element = Poly(prime_field, _prime_field_digits(p, candidate, n))

            if all(
                element.powmod((order - 1) // f, modulus) != Poly.one(prime_field)
                for f in factors
            ):
                return candidate

    raise InvariantBreachError(
        "primitive-element", f"F_{order} has no primitive element."
    )


def _multiplication_matrix(p, n, modulus_coefficients, multiplier):
    """The matrix over F_p whose j-th row holds the coefficients of
    multiplier * t^j reduced by the modulus."""
    from abelzeta.algebra.polynomials import Poly

    prime_field = field_ctx(p, 1)
    modulus = Poly(prime_field, modulus_coefficients)
    multiplier = Poly(prime_field, _prime_field_digits(p, multiplier, n))

    matrix = np.zeros((n, n), dtype=np.int64)

    for j in range(n):

        row = (multiplier * Poly.monomial(prime_field, j)) % modulus
        coefficients = row.coefficients + (0,) * (n - len(row.coefficients))

        matrix[j, :] = coefficients

    return matrix


def _power_table(p, n, modulus_coefficients, generator):
    """Builds exp[k] = generator^k for 0 <= k < p^n - 1 by repeated doubling,
    multiplying each filled block by a fixed power of the generator."""
    from abelzeta.algebra.polynomials import Poly

    order = p ** n
    powers_of_p = np.array([p ** i for i in range(n)], dtype=np.int64)

    exp_table = np.empty(order - 1, dtype=np.int64)
    exp_table[0] = 1

    filled = 1

    while filled < order - 1:

        if n == 1:
            multiplier = pow(generator, filled, p)
        else:
            prime_field = field_ctx(p, 1)
            modulus = Poly(prime_field, modulus_coefficients)
            power = Poly(prime_field, _prime_field_digits(p, generator, n)).powmod(
                filled, modulus
            )
            multiplier = sum(c * p ** i for i, c in enumerate(power.coefficients))

        count = min(filled, order - 1 - filled)

        if n == 1:
            exp_table[filled : filled + count] = (exp_table[:count] * multiplier) % p

        else:

            matrix = _multiplication_matrix(p, n, modulus_coefficients, multiplier)

            for start in range(0, count, _CHUNK_SIZE):

                stop = min(start + _CHUNK_SIZE, count)

                digits = (exp_table[start:stop, None] // powers_of_p) % p
                product = (digits @ matrix) % p

                exp_table[filled + start : filled + stop] = product @ powers_of_p

        filled += count

    return exp_table


def _build_context(p, n):

    modulus_coefficients = canonical_modulus(p, n)
    generator = _find_generator(p, n, modulus_coefficients)

    exp_table = _power_table(p, n, modulus_coefficients, generator)

    log_table = np.full(p ** n, -1, dtype=np.int64)
    log_table[exp_table] = np.arange(p ** n - 1, dtype=np.int64)

    if (log_table[1:] < 0).any():

        raise InvariantBreachError(
            "primitive-element",
            f"The powers of {generator} do not exhaust the units of F_{p ** n}.",
        )

    return FieldCtx(p, n, modulus_coefficients, generator, exp_table, log_table)


def field_ctx(p, n=1, budget=None):
    """Returns the canonical context of F_{p^n}. Contexts are memoized, so
    repeated calls return the identical object.

    Parameters
    ----------
    p: int
        A prime.
    n: int
        The extension degree over F_p.
    budget: int, optional
        The largest field order allowed. Defaults to the engine budget.

    Returns
    -------
    FieldCtx
    """

    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"The characteristic must be prime, not {p}.")
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"The extension degree must be a positive integer, not {n}.")

    key = (p, n)

    with _contexts_lock:

        if key in _contexts:
            return _contexts[key]

        check_budget(p ** n, resolve_budget(budget), "field elements")

        logger.debug(f"Building the arithmetic tables of F_{p}^{n}.")

        context = _build_context(p, n)
        _contexts[key] = context

    return context


class Embedding:
    """A field embedding F_{p^n} -> F_{p^(n*d)} determined by the image of the
    generator ``t`` of the source."""

    @property
    def source(self):
        """FieldCtx: The field being embedded."""
        return self._source

    @property
    def target(self):
        """FieldCtx: The field being embedded into."""
        return self._target

    @property
    def degree(self):
        """int: The relative degree d of the target over the source."""
        return self._target.n // self._source.n

    @property
    def image_of_generator(self):
        """FieldElement: The image of ``t``, a root of the source modulus."""
        return FieldElement(self._target, self._image_of_generator)

    def __init__(self, source, target, image_of_generator):
        """
        Parameters
        ----------
        source: FieldCtx
            The field being embedded.
        target: FieldCtx
            The field being embedded into.
        image_of_generator: int
            The encoding in `target` of the image of ``t``.
        """

        if source.p != target.p or target.n % source.n != 0:
            raise FieldMismatchError(f"{source} does not embed into {target}.")

        root_value = target.evaluate_everywhere(
            source.modulus_coefficients, np.array([image_of_generator])
        )[0]

        if root_value != 0:
            raise ValueError(
                f"{image_of_generator} is not a root of the modulus of {source}."
            )

        self._source = source
        self._target = target
        self._image_of_generator = image_of_generator

        # The image of sum(c_i t^i) is sum(c_i g^i) for the image g of t, and
        # prime field constants keep their encoding in every extension.
        digits = source.digit_arrays(source.elements())

        image = np.zeros(source.order, dtype=np.int64)
        power = 1

        for i in range(source.n):

            image = target.add_arrays(image, target.mul_arrays(digits[:, i], power))
            power = target.mul(power, image_of_generator)

        self._image = image

        self._preimage = np.full(target.order, -1, dtype=np.int64)
        self._preimage[image] = np.arange(source.order, dtype=np.int64)

        self._image_s = image.tolist()

    def map_value(self, value):
        """int: The encoding of the image of an encoded source element."""
        return self._image_s[value]

    def map_array(self, values):
        """numpy.ndarray: The images of many encoded source elements."""
        return self._image[np.asarray(values, np.int64)]

    def preimage(self, value):
        """Returns the source encoding of a target element which lies in the
        image of this embedding.

        Raises
        ------
        ValueError
            If the element is not in the image.
        """
        source_value = int(self._preimage[value])

        if source_value < 0:
            raise ValueError(f"{value} is not in the image of {self._source}.")

        return source_value

    def preimage_array(self, values):
        """numpy.ndarray: The source encodings of many image elements, with -1
        for elements outside of the image."""
        return self._preimage[np.asarray(values, np.int64)]

    def __call__(self, element):

        if element.ctx is not self._source:
            raise FieldMismatchError(
                f"{element!r} is not an element of {self._source}."
            )

        return FieldElement(self._target, self.map_value(element.value))

    def verify(self, samples=100, seed=0):
        """Checks that the embedding is a ring homomorphism on randomly drawn
        pairs of elements.

        Parameters
        ----------
        samples: int
            The number of random pairs to test.
        seed: int
            The seed of the random source.

        Returns
        -------
        bool
        """
        rng = np.random.default_rng(seed)

        for _ in range(samples):

            a = self._source.random_element(rng)
            b = self._source.random_element(rng)

            if self(a + b) != self(a) + self(b) or self(a * b) != self(a) * self(b):
                return False

        return self(FieldElement(self._source, 1)) == 1

    def __repr__(self):
        return f"Embedding({self._source} -> {self._target})"


_embeddings = {}
_embeddings_lock = threading.RLock()


def canonical_embedding(source, target):
    """Returns the canonical embedding of `source` into `target`, which maps
    ``t`` to the canonically least root of the source modulus.

    Parameters
    ----------
    source: FieldCtx
        The subfield, F_{p^n}.
    target: FieldCtx
        The extension, F_{p^(n*d)}.

    Returns
    -------
    Embedding
    """
    key = (source.p, source.n, target.n)

    with _embeddings_lock:

        if key in _embeddings:
            return _embeddings[key]

        if source.p != target.p or target.n % source.n != 0:
            raise FieldMismatchError(f"{source} does not embed into {target}.")

        values = target.evaluate_everywhere(source.modulus_coefficients)
        roots = np.flatnonzero(values == 0)

        if len(roots) == 0:
            raise InvariantBreachError(
                "embedding", f"The modulus of {source} has no root in {target}."
            )

        embedding = Embedding(source, target, int(roots[0]))
        _embeddings[key] = embedding

    return embedding


def extension_ctx(base, degree, budget=None):
    """FieldCtx: The context of F_{q^degree} for the base field F_q, which is
    represented as F_{p^(n*degree)} over the prime field."""
    return field_ctx(base.p, base.n * degree, budget)


def trace_to_prime(element):
    """The absolute trace sum_{i < m} a^(p^i) of an element of F_{p^m}.

    Parameters
    ----------
    element: FieldElement
        The element.

    Returns
    -------
    FieldElement
        The trace, which lies in the prime subfield.
    """
    return element.trace_to_prime()


def rth_power_residue_degree(u0, r, base_order=None):
    """Returns the least j >= 1 with u0^((Q^j - 1)/r) = 1 where Q is the order
    of the field of u0. This is the common degree of the irreducible factors
    of T^r - u0 over that field, and always divides r.

    Parameters
    ----------
    u0: FieldElement
        A nonzero element of F_Q.
    r: int
        A positive integer dividing Q - 1 (and q - 1 when `base_order` = q is
        given).
    base_order: int, optional
        The order q of the field the r-th roots of unity are required to lie in.

    Returns
    -------
    int
    """

    if u0.is_zero:
        raise ValueError("The residue must be nonzero.")
    if r < 1:
        raise ValueError(f"r must be a positive integer, not {r}.")

    order = u0.ctx.order

    if (order - 1) % r != 0 or (base_order is not None and (base_order - 1) % r != 0):
        raise ValueError(
            f"{r} must divide q - 1 so that the r-th roots of unity exist."
        )

    for j in range(1, r + 1):

        if u0 ** ((order ** j - 1) // r) == 1:

            if r % j != 0:
                raise InvariantBreachError(
                    "power-residue", f"The residue degree {j} does not divide {r}."
                )

            return j

    raise InvariantBreachError(
        "power-residue",
        f"{u0!r} is not an r-th power in any extension of degree <= {r}.",
    )
