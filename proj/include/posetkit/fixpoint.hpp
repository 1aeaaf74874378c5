#pragma once

#include "posetkit/chains.hpp"

#include <functional>
#include <string>
#include <vector>

namespace posetkit {

/// Default bound on h applications for the abstract engine, where divergence
/// cannot be ruled out ahead of time.
inline constexpr long kDefaultFixpointCap = 1'000'000;

/// A CPO presented behaviourally: a starting element plus the two predicates
/// the iteration needs. The chain-sup hypothesis is not checkable in this
/// form; the map under test is passed at call time. equal and leq must agree
/// (mutually-leq elements are equal) on every element the run visits.
template <class T>
struct AbstractCpo {
    T bottom;
    std::function<bool(const T&, const T&)> equal;
    std::function<bool(const T&, const T&)> leq;
};

/// Outcome of the iteration x0 = bottom, x_{k+1} = h(x_k). The trace lists
/// the distinct iterates (strictly increasing); the final application that
/// merely re-observes the fixpoint is excluded, so |trace| = iterations + 1.
template <class T>
struct FixpointReport {
    T fixpoint{};
    long iterations = 0;
    std::vector<T> trace;
};

/// Iterates h from bottom until two consecutive values are equal and returns
/// that value. h must be inflationary (x ≤ h(x)); this is checked lazily, on
/// the iterates actually visited, since the domain may be huge. cap bounds
/// the number of h applications — reaching a fixpoint costs iterations + 1
/// of them — and running out raises cap_exceeded rather than diverging.
template <class T, class H>
FixpointReport<T> bw_fixpoint(const AbstractCpo<T>& cpo, H&& h, long cap = kDefaultFixpointCap) {
    if (cap < 1) throw Error(Errc::precondition_failed, "iteration cap must be positive");
    FixpointReport<T> rep;
    rep.trace.push_back(cpo.bottom);
    for (long applied = 1;; ++applied) {
        const T& x = rep.trace.back();
        T next = h(x);
        bool le = cpo.leq(x, next);
        bool ge = cpo.leq(next, x);
        bool eq = cpo.equal(next, x);
        if (le && ge && !eq)
            throw Error(Errc::order_inconsistent,
                        "iterates " + std::to_string(applied - 1) + " and " +
                            std::to_string(applied) + " are mutually leq but not equal");
        if (eq && !(le && ge))
            throw Error(Errc::order_inconsistent,
                        "iterates " + std::to_string(applied - 1) + " and " +
                            std::to_string(applied) + " are equal but not mutually leq");
        if (eq) {
            rep.iterations = applied - 1;
            rep.fixpoint = x;
            return rep;
        }
        if (!le)
            throw Error(Errc::not_inflationary,
                        "h drops below its argument at iterate " + std::to_string(applied - 1));
        if (applied == cap)
            throw Error(Errc::cap_exceeded, "no fixed point within " + std::to_string(cap) +
                                                " applications of h");
        rep.trace.push_back(std::move(next));
    }
}

/// Chains of p (including ∅) that have no least upper bound. Empty result
/// means p is a valid finite CPO; since only ∅ can lack a sup when the poset
/// is nonempty, that is equivalent to "nonempty with a least element", but
/// the check stays definitional and enumerates everything.
std::vector<SubsetBits> validate_cpo_finite(const Poset& p, int limit = kExhaustiveLimit);

/// A poset whose chains all have sups, wrapped as a CPO over element
/// indices. Construction runs validate_cpo_finite and rejects anything else.
class FinitePosetCpo {
public:
    explicit FinitePosetCpo(Poset p, int limit = kExhaustiveLimit);

    const Poset& poset() const noexcept { return p_; }
    int bottom() const noexcept { return bottom_; }

    AbstractCpo<int> as_abstract() const;

private:
    Poset p_;
    int bottom_ = 0;
};

/// The engine on FinitePosetCpo(p), with h supplied as an index table
/// (h[i] = index of h applied to element i). The table is checked up front:
/// totality, and x ≤ h(x) at every element — eager beats lazy when the
/// domain is small enough to scan.
FixpointReport<int> bw_fixpoint_finite(const Poset& p, const std::vector<int>& h,
                                       long cap = kDefaultFixpointCap,
                                       int limit = kExhaustiveLimit);

/// Checks that the engine's iterate set equals the greatest good chain of
/// the stage map on chains: ∅ advances to {⊥} (adjoining its sup), and a
/// chain whose sup is already a member advances by h(sup). True on every
/// valid instance; exposed as a computed verdict rather than an assertion so
/// the property suites can run it across whole corpora. Preconditions (valid
/// CPO, inflationary h) are enforced with precondition_failed.
bool bw_chain_equals_ggc(const Poset& p, const std::vector<int>& h,
                         int limit = kExhaustiveLimit);

} // namespace posetkit
