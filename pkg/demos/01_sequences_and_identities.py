"""
Chebyshev and Lucas sequences behind the solution chains
========================================================

Everything the solver does rests on one three-term recurrence,
X_{k+1} = q*X_k - X_{k-1}, evaluated with plain Python integers.
"""

from cayleycubic import (
    cheb_t,
    cheb_u,
    family_multiplier,
    lucas_u,
    lucas_v,
    scaled_cheb_t,
    scaled_cheb_u,
)

# First-kind values T_n(x) at a fixed integer point.  Seeds are (1, x).
print("T_n(2):", [cheb_t(n, 2) for n in range(8)])
print("U_n(2):", [cheb_u(n, 2) for n in range(8)])

# The product rule is what lets two chain elements multiply into a third:
# 2 T_n T_m = T_{n+m} + T_{|n-m|}.
n, m, x = 4, 6, 3
lhs = 2 * cheb_t(n, x) * cheb_t(m, x)
rhs = cheb_t(n + m, x) + cheb_t(abs(n - m), x)
print(f"2*T_{n}*T_{m} = {lhs}, T_{n+m} + T_{abs(n-m)} = {rhs}")

# Composition collapses nested indices: T_a(T_b(x)) = T_{ab}(x).
print("T_3(T_4(2)) =", cheb_t(3, cheb_t(4, 2)), "= T_12(2) =", cheb_t(12, 2))

# A chain with base (s, b) runs the same recurrence from seeds (s, b) with
# multiplier 2b/s, which must be an integer.
s, b = 3, 6
print(f"multiplier for (s={s}, b={b}):", family_multiplier(s, b))
print("chain:", [scaled_cheb_t(s, b, k) for k in range(8)])
print("companion:", [scaled_cheb_u(s, b, k) for k in range(8)])

# At s=2 the chain literally *is* a Lucas pair with q=1: the main chain is
# V_n(p, 1) and the companion (shifted by one) is U_n(p, 1).
p = 5
print("scaled chain s=2:", [scaled_cheb_t(2, p, k) for k in range(7)])
print("V_n(5, 1)       :", [lucas_v(p, 1, k) for k in range(7)])
print("companion s=2   :", [scaled_cheb_u(2, p, k) for k in range(6)])
print("U_{n+1}(5, 1)   :", [lucas_u(p, 1, k) for k in range(1, 7)])

# The seeds matter.  Second-kind seeds (1, 2x) break the product rule:
bad_lhs = 2 * cheb_u(n, x) * cheb_u(m, x)
bad_rhs = cheb_u(n + m, x) + cheb_u(abs(n - m), x)
print("with U instead of T the product rule fails:", bad_lhs, "!=", bad_rhs)
