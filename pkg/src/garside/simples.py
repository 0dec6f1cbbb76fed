"""Derived operations on simple elements, generic over the atom-level interface.

:class:`SimpleLatticeOps` is mixed into ``GarsideContext``.  Every routine
here is written purely in terms of the two required atom-division
operations, the atom list and the distinguished simples ``identity`` and
``delta``; no structure-specific knowledge is used.  Concrete contexts may
override any of these methods with faster native code (the braid context
does), in which case the generic version stays reachable as an unbound
call, e.g. ``SimpleLatticeOps.equal_simple(ctx, s, t)``.

Two determinism rules are baked in and relied upon elsewhere:

* "take an atom dividing s" always scans the atom list in index order and
  takes the first divisor;
* the stripping loops (gcd, equality, local sliding) restart the atom scan
  from the first atom after every successful strip.
"""

from __future__ import annotations

from .errors import InternalInvariantError


class SimpleLatticeOps:
    """Generic lattice and complement operations for simple elements.

    Expects the host class to provide ``atoms``, ``identity``, ``delta``,
    ``divide_atom_left(a, s)`` and ``divide_atom_right(s, a)``.
    """

    # -- divisor scans ------------------------------------------------

    def first_left_divisor(self, s):
        """First atom (in index order) left-dividing s, with quotient, or None."""
        for a in self.atoms:
            q = self.divide_atom_left(a, s)
            if q is not None:
                return a, q
        return None

    def first_right_divisor(self, s):
        """First atom (in index order) right-dividing s, with quotient, or None."""
        for a in self.atoms:
            q = self.divide_atom_right(s, a)
            if q is not None:
                return a, q
        return None

    def is_trivial_simple(self, s) -> bool:
        """True iff s is the identity (no atom divides it)."""
        return self.first_left_divisor(s) is None

    def equal_simple(self, s, t) -> bool:
        """Test s == t by stripping common atom prefixes until none remain."""
        atoms = self.atoms
        i = 0
        while i < len(atoms):
            a = atoms[i]
            qs = self.divide_atom_left(a, s)
            qt = self.divide_atom_left(a, t) if qs is not None else None
            if qs is not None and qt is not None:
                s, t = qs, qt
                i = 0
            else:
                i += 1
        return self.is_trivial_simple(s) and self.is_trivial_simple(t)

    def atom_length(self, s) -> int:
        """Number of atoms in any decomposition of the simple element s."""
        count = 0
        while True:
            fd = self.first_left_divisor(s)
            if fd is None:
                return count
            _, s = fd
            count += 1

    def atom_simple(self, a):
        """The simple element represented by the atom a."""
        return self.mult_atom_left(a, self.identity)

    # -- complements and tau ------------------------------------------

    def right_complement(self, s):
        """The simple element s⁻¹·Δ."""
        d = self.delta
        while True:
            fd = self.first_left_divisor(s)
            if fd is None:
                return d
            a, s = fd
            d = self.divide_atom_left(a, d)
            if d is None:
                raise InternalInvariantError("right complement ran out of delta")

    def left_complement(self, s):
        """The simple element Δ·s⁻¹."""
        d = self.delta
        while True:
            fd = self.first_right_divisor(s)
            if fd is None:
                return d
            a, s = fd
            d = self.divide_atom_right(d, a)
            if d is None:
                raise InternalInvariantError("left complement ran out of delta")

    def tau_power(self, s, k: int):
        """Conjugate of the simple s by Δ^k, computed as the 2k-th complement power."""
        while k > 0:
            s = self.right_complement(self.right_complement(s))
            k -= 1
        while k < 0:
            s = self.left_complement(self.left_complement(s))
            k += 1
        return s

    # -- lattice operations --------------------------------------------

    def gcd_simple(self, s, t):
        """Greatest common divisor of two simples for the prefix order."""
        atoms = self.atoms
        d = self.delta
        i = 0
        while i < len(atoms):
            a = atoms[i]
            qs = self.divide_atom_left(a, s)
            qt = self.divide_atom_left(a, t) if qs is not None else None
            if qs is not None and qt is not None:
                s, t = qs, qt
                d = self.divide_atom_left(a, d)
                i = 0
            else:
                i += 1
        return self.left_complement(d)

    def rgcd_simple(self, s, t):
        """Greatest common divisor of two simples for the suffix order."""
        atoms = self.atoms
        d = self.delta
        i = 0
        while i < len(atoms):
            a = atoms[i]
            qs = self.divide_atom_right(s, a)
            qt = self.divide_atom_right(t, a) if qs is not None else None
            if qs is not None and qt is not None:
                s, t = qs, qt
                d = self.divide_atom_right(d, a)
                i = 0
            else:
                i += 1
        return self.right_complement(d)

    def lcm_simple(self, s, t):
        """Least common multiple of two simples for the prefix order."""
        return self.left_complement(
            self.rgcd_simple(self.right_complement(s), self.right_complement(t))
        )

    def rlcm_simple(self, s, t):
        """Least common multiple of two simples for the suffix order."""
        return self.right_complement(
            self.gcd_simple(self.left_complement(s), self.left_complement(t))
        )

    # -- local slidings -------------------------------------------------

    def local_sliding(self, s, t):
        """Left-weighted pair with the same product as s·t.

        Transfers u = ∂(s) ∧ t from the front of t to the back of s,
        returning (s·u, u⁻¹·t).
        """
        atoms = self.atoms
        sp = self.right_complement(s)
        i = 0
        while i < len(atoms):
            a = atoms[i]
            qs = self.divide_atom_left(a, sp)
            qt = self.divide_atom_left(a, t) if qs is not None else None
            if qs is not None and qt is not None:
                sp, t = qs, qt
                i = 0
            else:
                i += 1
        return self.left_complement(sp), t

    def local_right_sliding(self, s, t):
        """Right-weighted pair with the same product as s·t.

        Transfers u = s ∧^r ∂⁻¹(t) from the back of s to the front of t,
        returning (s·u⁻¹, u·t).
        """
        atoms = self.atoms
        tp = self.left_complement(t)
        i = 0
        while i < len(atoms):
            a = atoms[i]
            qs = self.divide_atom_right(s, a)
            qt = self.divide_atom_right(tp, a) if qs is not None else None
            if qs is not None and qt is not None:
                s, tp = qs, qt
                i = 0
            else:
                i += 1
        return s, self.right_complement(tp)

    # -- products with atoms ---------------------------------------------

    def mult_atom_right(self, s, a):
        """s·a if it is simple, else None."""
        q = self.divide_atom_left(a, self.right_complement(s))
        if q is None:
            return None
        return self.left_complement(q)

    def mult_atom_left(self, a, s):
        """a·s if it is simple, else None."""
        q = self.divide_atom_right(self.left_complement(s), a)
        if q is None:
            return None
        return self.right_complement(q)

    # -- checks used by tests and assertions ------------------------------

    def is_left_weighted(self, s, t) -> bool:
        """True iff the pair s·t is left weighted: ∂(s) ∧ t = 1."""
        return self.gcd_simple(self.right_complement(s), t) == self.identity

    def is_right_weighted(self, s, t) -> bool:
        """True iff the pair s·t is right weighted: s ∧^r ∂⁻¹(t) = 1."""
        return self.rgcd_simple(s, self.left_complement(t)) == self.identity
