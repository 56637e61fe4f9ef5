#include "homlin/routes.hpp"

#include <algorithm>
#include <cmath>

#include "homlin/arrangement.hpp"
#include "homlin/dowling.hpp"
#include "homlin/gamma.hpp"
#include "homlin/graph.hpp"
#include "homlin/permutation.hpp"

namespace homlin {

ChiFamily chi_family_from_string(const std::string& name) {
    if (name == "braid") return ChiFamily::braid;
    if (name == "typeA") return ChiFamily::typeA;
    if (name == "typeB") return ChiFamily::typeB;
    if (name == "dowling") return ChiFamily::dowling;
    throw ParameterError("unknown chi family: " + name);
}

std::string to_string(ChiFamily f) {
    switch (f) {
        case ChiFamily::braid: return "braid";
        case ChiFamily::typeA: return "typeA";
        case ChiFamily::typeB: return "typeB";
        case ChiFamily::dowling: return "dowling";
    }
    throw ParameterError("unknown chi family");
}

ChiRoute chi_route_from_string(const std::string& name) {
    if (name == "poset_mobius") return ChiRoute::poset_mobius;
    if (name == "dperm_counts") return ChiRoute::dperm_counts;
    if (name == "id_forests") return ChiRoute::id_forests;
    if (name == "rational_arrangement") return ChiRoute::rational_arrangement;
    if (name == "finite_field_interpolation") return ChiRoute::finite_field_interpolation;
    throw ParameterError("unknown chi route: " + name);
}

std::string to_string(ChiRoute r) {
    switch (r) {
        case ChiRoute::poset_mobius: return "poset_mobius";
        case ChiRoute::dperm_counts: return "dperm_counts";
        case ChiRoute::id_forests: return "id_forests";
        case ChiRoute::rational_arrangement: return "rational_arrangement";
        case ChiRoute::finite_field_interpolation: return "finite_field_interpolation";
    }
    throw ParameterError("unknown chi route");
}

int chi_length(ChiFamily family, int n) {
    return family == ChiFamily::braid ? n - 1 : 2 * n - 1;
}

namespace {

int effective_modulus(ChiFamily family, int m) {
    switch (family) {
        case ChiFamily::braid: return 1;
        case ChiFamily::typeA: return 1;
        case ChiFamily::typeB: return 2;
        case ChiFamily::dowling: return m;
    }
    throw ParameterError("unknown chi family");
}

IntPolynomial chi_from_signed_cycle_counts(const std::map<int, Int>& by_cycles) {
    int kmax = 0;
    for (const auto& [k, cnt] : by_cycles) kmax = std::max(kmax, k);
    std::vector<Int> coeffs(kmax, Int(0)); // coefficient of t^(k-1)
    for (const auto& [k, cnt] : by_cycles) coeffs[k - 1] = k % 2 == 0 ? cnt : Int(-cnt);
    return IntPolynomial(std::move(coeffs));
}

IntPolynomial chi_poset(ChiFamily family, int n, int m) {
    switch (family) {
        case ChiFamily::braid:
            return bond_lattice(complete_graph(n)).poset.characteristic_polynomial();
        case ChiFamily::typeA:
            return gamma_subposet(n).poset.characteristic_polynomial();
        case ChiFamily::typeB:
        case ChiFamily::dowling:
            return homogenized_subposet(n, effective_modulus(family, m))
                .poset.characteristic_polynomial();
    }
    throw ParameterError("unknown chi family");
}

IntPolynomial chi_dperm(ChiFamily family, int n, int m) {
    std::vector<int> ground(2 * n);
    for (int i = 0; i < 2 * n; ++i) ground[i] = i + 1;
    switch (family) {
        case ChiFamily::typeA:
            return chi_from_signed_cycle_counts(
                count_family(PermFamily::dperm, ground).by_cycles);
        case ChiFamily::typeB:
        case ChiFamily::dowling:
            return chi_from_signed_cycle_counts(
                count_family(PermFamily::labeled_dperm, ground, effective_modulus(family, m))
                    .by_cycles);
        default:
            throw ParameterError("dperm_counts route exists only for typeA/typeB/dowling");
    }
}

IntPolynomial chi_id_forests(int n) {
    std::map<int, Int> fc = f_counts(n);
    int kmax = 0;
    for (const auto& [k, cnt] : fc) kmax = std::max(kmax, k);
    std::vector<Int> coeffs(kmax, Int(0));
    for (const auto& [k, cnt] : fc) coeffs[k - 1] = k % 2 == 0 ? cnt : Int(-cnt);
    return IntPolynomial(std::move(coeffs));
}

SymbolicArrangement family_arrangement(ChiFamily family, int n, int m) {
    switch (family) {
        case ChiFamily::braid: return make_arrangement(ArrFamily::braid, n);
        case ChiFamily::typeA: return make_arrangement(ArrFamily::homogenized_linial, n);
        case ChiFamily::typeB: return make_arrangement(ArrFamily::typeB_homogenized, n);
        case ChiFamily::dowling: return make_arrangement(ArrFamily::dowling_homogenized, n, m);
    }
    throw ParameterError("unknown chi family");
}

IntPolynomial chi_rational(ChiFamily family, int n, int m) {
    SymbolicArrangement sym = family_arrangement(family, n, m);
    if (effective_modulus(family, m) > 2)
        throw ParameterError("rational_arrangement route needs m <= 2");
    if (sym.dim > 8)
        throw ParameterError("rational_arrangement route guarded to dimension <= 8");
    return intersection_poset(to_rational(sym)).poset.characteristic_polynomial();
}

const uint32_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61};

std::vector<uint32_t> good_primes(int m, int d, int count, double budget) {
    std::vector<uint32_t> qs;
    for (uint32_t q : kPrimes) {
        if ((q - 1) % static_cast<uint32_t>(m) != 0) continue;
        if (std::pow(static_cast<double>(q), d) > budget) break;
        qs.push_back(q);
        if (static_cast<int>(qs.size()) == count) return qs;
    }
    throw ParameterError("finite_field_interpolation: not enough primes within the point budget");
}

IntPolynomial chi_ff_interpolation(ChiFamily family, int n, int m, bool force) {
    SymbolicArrangement sym = family_arrangement(family, n, m);
    const int r = chi_length(family, n);
    const int d = sym.dim;
    const double budget = force ? 8.5e9 : 2.5e8;
    std::vector<uint32_t> qs = good_primes(effective_modulus(family, m), d, r + 1, budget);

    // chi(q) = count / q^(d-r) must divide exactly at every sample point.
    std::vector<Rat> xs, ys;
    for (uint32_t q : qs) {
        Int cnt = finite_field_count(sym, q, budget, force);
        Int scale = 1;
        for (int k = 0; k < d - r; ++k) scale *= q;
        if (cnt % scale != 0)
            throw IntegrityError("finite_field_interpolation: count not divisible by q^(d-r)");
        xs.emplace_back(q);
        ys.emplace_back(cnt / scale);
    }

    // Lagrange interpolation over Q.
    const int npts = static_cast<int>(xs.size());
    std::vector<Rat> acc(npts, Rat(0)); // coefficients, ascending
    for (int i = 0; i < npts; ++i) {
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (int j = 0; j < npts; ++j) {
            if (j == i) continue;
            // basis *= (t - x_j)
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (size_t k = 0; k < basis.size(); ++k) {
                next[k] -= basis[k] * xs[j];
                next[k + 1] += basis[k];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        Rat w = ys[i] / denom;
        for (size_t k = 0; k < basis.size(); ++k) acc[k] += basis[k] * w;
    }
    std::vector<Int> coeffs;
    for (const Rat& c : acc) {
        if (denominator(c) != 1)
            throw IntegrityError("finite_field_interpolation: non-integral coefficient");
        coeffs.push_back(numerator(c));
    }
    return IntPolynomial(std::move(coeffs));
}

} // namespace

IntPolynomial chi_by_route(ChiFamily family, int n, int m, ChiRoute route, bool force) {
    if (n < 1) throw ParameterError("n must be >= 1");
    if (m < 1) throw ParameterError("m must be >= 1");
    switch (route) {
        case ChiRoute::poset_mobius: return chi_poset(family, n, m);
        case ChiRoute::dperm_counts: return chi_dperm(family, n, m);
        case ChiRoute::id_forests:
            if (family != ChiFamily::typeA)
                throw ParameterError("id_forests route exists only for typeA");
            return chi_id_forests(n);
        case ChiRoute::rational_arrangement: return chi_rational(family, n, m);
        case ChiRoute::finite_field_interpolation:
            return chi_ff_interpolation(family, n, m, force);
    }
    throw ParameterError("unknown chi route");
}

std::vector<ChiRoute> available_chi_routes(ChiFamily family, int n, int m, bool force) {
    std::vector<ChiRoute> out;
    const int em = effective_modulus(family, m);
    const bool perm_scale = n <= (force ? 5 : 4);
    if ((family == ChiFamily::braid && n <= 7) || (family == ChiFamily::typeA && n <= 5) ||
        ((family == ChiFamily::typeB || family == ChiFamily::dowling) && n <= 3))
        out.push_back(ChiRoute::poset_mobius);
    if (family != ChiFamily::braid && perm_scale &&
        (family == ChiFamily::typeA || (n <= 3 && em <= 4)))
        out.push_back(ChiRoute::dperm_counts);
    if (family == ChiFamily::typeA && n <= 5) out.push_back(ChiRoute::id_forests);
    if (em <= 2) {
        SymbolicArrangement sym = family_arrangement(family, n, m);
        if (sym.dim <= 8) out.push_back(ChiRoute::rational_arrangement);
    }
    try {
        good_primes(em, family_arrangement(family, n, m).dim, chi_length(family, n) + 1,
                    force ? 8.5e9 : 2.5e8);
        out.push_back(ChiRoute::finite_field_interpolation);
    } catch (const ParameterError&) {
    }
    return out;
}

} // namespace homlin
