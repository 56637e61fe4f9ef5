#include "homlin/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>

namespace homlin {

ArrFamily arr_family_from_string(const std::string& name) {
    if (name == "braid") return ArrFamily::braid;
    if (name == "linial") return ArrFamily::linial;
    if (name == "homogenized_linial" || name == "typeA") return ArrFamily::homogenized_linial;
    if (name == "typeB_homogenized" || name == "typeB") return ArrFamily::typeB_homogenized;
    if (name == "dowling_homogenized" || name == "dowling") return ArrFamily::dowling_homogenized;
    throw ParameterError("unknown arrangement family: " + name);
}

std::string to_string(ArrFamily f) {
    switch (f) {
        case ArrFamily::braid: return "braid";
        case ArrFamily::linial: return "linial";
        case ArrFamily::homogenized_linial: return "homogenized_linial";
        case ArrFamily::typeB_homogenized: return "typeB_homogenized";
        case ArrFamily::dowling_homogenized: return "dowling_homogenized";
    }
    throw ParameterError("unknown arrangement family");
}

namespace {

SymbolicHyperplane zero_plane(int d) {
    SymbolicHyperplane h;
    h.normal.assign(d, SymCoef::rational(0));
    h.constant = SymCoef::rational(0);
    return h;
}

} // namespace

SymbolicArrangement make_arrangement(ArrFamily family, int n, int m) {
    if (n < 1) throw ParameterError("make_arrangement needs n >= 1");
    if (m < 1) throw ParameterError("make_arrangement needs m >= 1");
    SymbolicArrangement arr;
    arr.modulus = 1;
    switch (family) {
        case ArrFamily::braid:
        case ArrFamily::linial: {
            arr.dim = n;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    SymbolicHyperplane h = zero_plane(n);
                    h.normal[i - 1] = SymCoef::rational(1);
                    h.normal[j - 1] = SymCoef::rational(-1);
                    h.constant = SymCoef::rational(family == ArrFamily::linial ? 1 : 0);
                    arr.hyperplanes.push_back(std::move(h));
                }
            break;
        }
        case ArrFamily::homogenized_linial: {
            // x_i - x_j = y_i over 1 <= i < j <= n+1; coordinates
            // x_1..x_{n+1}, y_1..y_{n+1}.  Its intersection lattice matches
            // the bond lattice of Gamma_2n.
            const int npts = n + 1;
            arr.dim = 2 * npts;
            for (int i = 1; i <= npts; ++i)
                for (int j = i + 1; j <= npts; ++j) {
                    SymbolicHyperplane h = zero_plane(arr.dim);
                    h.normal[i - 1] = SymCoef::rational(1);
                    h.normal[j - 1] = SymCoef::rational(-1);
                    h.normal[npts + i - 1] = SymCoef::rational(-1);
                    arr.hyperplanes.push_back(std::move(h));
                }
            break;
        }
        case ArrFamily::typeB_homogenized: {
            // { x_i +- x_j = y_i : i < j } u { x_i = y_i }; coordinates
            // x_1..x_n, y_1..y_n.
            arr.dim = 2 * n;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int sign : {-1, +1}) {
                        SymbolicHyperplane h = zero_plane(arr.dim);
                        h.normal[i - 1] = SymCoef::rational(1);
                        h.normal[j - 1] = SymCoef::rational(sign);
                        h.normal[n + i - 1] = SymCoef::rational(-1);
                        arr.hyperplanes.push_back(std::move(h));
                    }
            for (int i = 1; i <= n; ++i) {
                SymbolicHyperplane h = zero_plane(arr.dim);
                h.normal[i - 1] = SymCoef::rational(1);
                h.normal[n + i - 1] = SymCoef::rational(-1);
                arr.hyperplanes.push_back(std::move(h));
            }
            break;
        }
        case ArrFamily::dowling_homogenized: {
            // { x_i - w^l x_j = y_i : i < j, 0 <= l < m } u { x_i = y_i }.
            arr.dim = 2 * n;
            arr.modulus = m;
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int l = 0; l < m; ++l) {
                        SymbolicHyperplane h = zero_plane(arr.dim);
                        h.normal[i - 1] = SymCoef::rational(1);
                        h.normal[j - 1] = SymCoef::omega(l, -1);
                        h.normal[n + i - 1] = SymCoef::rational(-1);
                        arr.hyperplanes.push_back(std::move(h));
                    }
            for (int i = 1; i <= n; ++i) {
                SymbolicHyperplane h = zero_plane(arr.dim);
                h.normal[i - 1] = SymCoef::rational(1);
                h.normal[n + i - 1] = SymCoef::rational(-1);
                arr.hyperplanes.push_back(std::move(h));
            }
            break;
        }
    }
    return arr;
}

namespace {

std::string coef_to_string(const SymCoef& c) {
    if (c.omega_pow < 0) {
        std::ostringstream o;
        o << c.rat;
        return o.str();
    }
    std::string s = c.rat < 0 ? "-" : "";
    return s + "w^" + std::to_string(c.omega_pow);
}

SymCoef coef_from_string(const std::string& tok) {
    auto wpos = tok.find("w^");
    if (wpos == std::string::npos) return SymCoef::rational(Rat(tok));
    int sign = 1;
    if (wpos == 1 && tok[0] == '-') sign = -1;
    else if (wpos != 0) throw ParameterError("bad coefficient token: " + tok);
    return SymCoef::omega(std::stoi(tok.substr(wpos + 2)), sign);
}

} // namespace

std::string write_arrangement(const SymbolicArrangement& arr) {
    std::ostringstream out;
    for (const auto& h : arr.hyperplanes) {
        for (int i = 0; i < arr.dim; ++i) {
            if (i) out << ' ';
            out << coef_to_string(h.normal[i]);
        }
        out << " | " << coef_to_string(h.constant) << '\n';
    }
    return out.str();
}

SymbolicArrangement parse_arrangement(std::istream& in, int modulus) {
    SymbolicArrangement arr;
    arr.modulus = modulus;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        auto bar = std::find(toks.begin(), toks.end(), "|");
        if (bar == toks.end() || bar + 2 != toks.end())
            throw ParameterError("arrangement line must be 'c_1 ... c_d | c_0'");
        SymbolicHyperplane h;
        for (auto it = toks.begin(); it != bar; ++it) h.normal.push_back(coef_from_string(*it));
        h.constant = coef_from_string(toks.back());
        if (arr.dim == 0) arr.dim = static_cast<int>(h.normal.size());
        if (static_cast<int>(h.normal.size()) != arr.dim)
            throw ParameterError("inconsistent dimension across lines");
        bool nonzero = false;
        for (const auto& c : h.normal)
            if (c.omega_pow >= 0 || c.rat != 0) nonzero = true;
        if (!nonzero) throw ParameterError("hyperplane needs a nonzero linear part");
        arr.hyperplanes.push_back(std::move(h));
    }
    return arr;
}

namespace {

Rat resolve_rat(const SymCoef& c, int modulus) {
    if (c.omega_pow < 0) return c.rat;
    if (modulus == 1) return c.rat;
    if (modulus == 2) return c.omega_pow % 2 == 0 ? c.rat : -c.rat;
    throw ParameterError("rational route needs m <= 2 (w is irrational for m >= 3)");
}

} // namespace

RationalArrangement to_rational(const SymbolicArrangement& arr) {
    RationalArrangement out;
    out.dim = arr.dim;
    for (const auto& h : arr.hyperplanes) {
        RationalHyperplane rh;
        for (const auto& c : h.normal) rh.normal.push_back(resolve_rat(c, arr.modulus));
        rh.constant = resolve_rat(h.constant, arr.modulus);
        bool nonzero = false;
        for (const Rat& v : rh.normal)
            if (v != 0) nonzero = true;
        if (!nonzero) throw IntegrityError("hyperplane with zero linear part");
        out.hyperplanes.push_back(std::move(rh));
    }
    return out;
}

namespace {

// Reduced row echelon form of an augmented system; nullopt when inconsistent.
std::optional<std::vector<std::vector<Rat>>> rref(std::vector<std::vector<Rat>> rows, int dim) {
    int r = 0;
    const int nrows = static_cast<int>(rows.size());
    for (int col = 0; col < dim && r < nrows; ++col) {
        int piv = -1;
        for (int i = r; i < nrows; ++i)
            if (rows[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        Rat inv = Rat(1) / rows[r][col];
        for (int k = col; k <= dim; ++k) rows[r][k] *= inv;
        for (int i = 0; i < nrows; ++i) {
            if (i == r || rows[i][col] == 0) continue;
            Rat f = rows[i][col];
            for (int k = col; k <= dim; ++k) rows[i][k] -= f * rows[r][k];
        }
        ++r;
    }
    // rows r..end have zero linear part; nonzero constant means empty flat
    for (int i = r; i < nrows; ++i)
        if (rows[i][dim] != 0) return std::nullopt;
    rows.resize(r);
    return rows;
}

} // namespace

std::string AffineFlat::key() const {
    std::ostringstream out;
    for (const auto& row : rows) {
        for (const Rat& v : row) out << v << ',';
        out << ';';
    }
    return out.str();
}

FlatPoset intersection_poset(const RationalArrangement& arr) {
    const int d = arr.dim;
    std::vector<AffineFlat> flats;
    std::map<std::string, int> index;

    AffineFlat ambient;
    ambient.dim = d;
    flats.push_back(ambient);
    index[ambient.key()] = 0;

    // Augmented row of hyperplane i.
    auto hrow = [&](int i) {
        std::vector<Rat> row(arr.hyperplanes[i].normal);
        row.push_back(arr.hyperplanes[i].constant);
        return row;
    };

    std::vector<int> hyperplane_flat(arr.hyperplanes.size(), -1);
    size_t frontier_begin = 0;
    while (frontier_begin < flats.size()) {
        size_t frontier_end = flats.size();
        for (size_t fi = frontier_begin; fi < frontier_end; ++fi)
            for (size_t hi = 0; hi < arr.hyperplanes.size(); ++hi) {
                std::vector<std::vector<Rat>> rows = flats[fi].rows;
                rows.push_back(hrow(static_cast<int>(hi)));
                auto reduced = rref(std::move(rows), d);
                if (!reduced) continue;
                AffineFlat f;
                f.dim = d;
                f.rows = std::move(*reduced);
                std::string k = f.key();
                auto [it, fresh] = index.emplace(k, static_cast<int>(flats.size()));
                if (fresh) flats.push_back(std::move(f));
            }
        frontier_begin = frontier_end;
    }

    for (size_t hi = 0; hi < arr.hyperplanes.size(); ++hi) {
        std::vector<std::vector<Rat>> rows{hrow(static_cast<int>(hi))};
        auto reduced = rref(std::move(rows), d);
        AffineFlat f;
        f.dim = d;
        f.rows = std::move(*reduced);
        hyperplane_flat[hi] = index.at(f.key());
    }

    // order: x <= y iff flat(y) is contained in flat(x), i.e. every equation
    // of x is implied by the system of y
    auto implied = [&](const std::vector<Rat>& row, const AffineFlat& by) {
        std::vector<Rat> r = row;
        for (const auto& basis : by.rows) {
            int col = 0;
            while (col < d && basis[col] == 0) ++col; // pivot column
            if (col == d || r[col] == 0) continue;
            Rat f = r[col];
            for (int k = 0; k <= d; ++k) r[k] -= f * basis[k];
        }
        for (int k = 0; k <= d; ++k)
            if (r[k] != 0) return false;
        return true;
    };
    const int n = static_cast<int>(flats.size());
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[i] = flats[i].codim();
    auto leq = [&](int x, int y) {
        if (flats[x].codim() > flats[y].codim()) return false;
        for (const auto& row : flats[x].rows)
            if (!implied(row, flats[y])) return false;
        return true;
    };
    FinitePoset poset(n, leq, std::move(rank));
    return FlatPoset{std::move(flats), std::move(poset), std::move(hyperplane_flat)};
}

PrimeField::PrimeField(uint32_t prime) : p(prime) {
    if (p < 2) throw ParameterError("q must be a prime");
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) throw ParameterError("q must be a prime");
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
    uint64_t base = a % p, acc = 1;
    while (e) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

uint32_t PrimeField::inv(uint32_t a) const {
    if (a % p == 0) throw DomainError("inverse of zero");
    return pow(a, p - 2);
}

std::optional<uint32_t> PrimeField::root_of_unity(int m) const {
    if (m < 1) throw ParameterError("order must be >= 1");
    if ((p - 1) % static_cast<uint32_t>(m) != 0) return std::nullopt;
    if (m == 1) return 1u;
    for (uint32_t x = 2; x < p; ++x) {
        uint32_t z = pow(x, (p - 1) / m);
        // order of z divides m; accept the first z of exact order m
        bool exact = z != 1;
        for (int dvs = 2; exact && dvs < m; ++dvs)
            if (m % dvs == 0 && pow(z, m / dvs) == 1) exact = false;
        if (exact) return z;
    }
    return std::nullopt;
}

uint32_t PrimeField::from_rat(const Rat& r) const {
    Int num = numerator(r), den = denominator(r);
    Int residue = num % p;
    if (residue < 0) residue += p;
    uint32_t a = static_cast<uint32_t>(residue);
    Int dres = den % p;
    if (dres == 0) throw ParameterError("denominator vanishes mod q");
    return mul(a, inv(static_cast<uint32_t>(dres)));
}

ModArrangement resolve_mod(const SymbolicArrangement& arr, uint32_t q) {
    PrimeField f(q);
    uint32_t omega = 1;
    if (arr.modulus > 1) {
        auto z = f.root_of_unity(arr.modulus);
        if (!z) throw ParameterError("q has no root of unity of order m (need q = 1 mod m)");
        omega = *z;
    }
    auto value = [&](const SymCoef& c) -> uint32_t {
        uint32_t base = f.from_rat(c.rat);
        if (c.omega_pow < 0) return base;
        return f.mul(base, f.pow(omega, c.omega_pow));
    };
    ModArrangement out;
    out.p = q;
    out.dim = arr.dim;
    for (const auto& h : arr.hyperplanes) {
        std::vector<uint32_t> row;
        row.reserve(arr.dim + 1);
        for (const auto& c : h.normal) row.push_back(value(c));
        row.push_back(value(h.constant));
        bool nonzero = false;
        for (int i = 0; i < arr.dim; ++i)
            if (row[i]) nonzero = true;
        if (!nonzero) throw ParameterError("hyperplane degenerates mod q");
        out.rows.push_back(std::move(row));
    }
    return out;
}

Int finite_field_count(const SymbolicArrangement& arr, uint32_t q, double max_points, bool force) {
    ModArrangement ma = resolve_mod(arr, q);
    const int d = ma.dim;
    const int H = static_cast<int>(ma.rows.size());
    if (!force && std::pow(static_cast<double>(q), d) > max_points)
        throw ParameterError("finite_field_count: q^d exceeds the budget (use force)");
    PrimeField f(q);

    // Precompute the inverse of each last-coordinate coefficient.
    std::vector<uint32_t> last_inv(H, 0);
    for (int h = 0; h < H; ++h)
        if (ma.rows[h][d - 1]) last_inv[h] = f.inv(ma.rows[h][d - 1]);

    Int total = 0;
    std::vector<uint32_t> partial(H, 0); // sum over fixed coordinates
    std::vector<uint64_t> forbidden((q + 63) / 64);

    std::function<void(int)> walk = [&](int k) {
        if (k == d - 1) {
            std::fill(forbidden.begin(), forbidden.end(), 0);
            int free_values = static_cast<int>(q);
            for (int h = 0; h < H; ++h) {
                const uint32_t c = ma.rows[h][d];
                if (ma.rows[h][d - 1] == 0) {
                    if (partial[h] == c) return; // whole slice lies on hyperplane h
                    continue;
                }
                uint32_t v = f.mul(f.sub(c, partial[h]), last_inv[h]);
                uint64_t& word = forbidden[v >> 6];
                uint64_t bit = 1ull << (v & 63);
                if (!(word & bit)) {
                    word |= bit;
                    --free_values;
                }
            }
            total += free_values;
            return;
        }
        const std::vector<uint32_t> saved = partial;
        for (uint32_t v = 0; v < q; ++v) {
            if (v) {
                for (int h = 0; h < H; ++h) partial[h] = f.add(partial[h], ma.rows[h][k]);
            }
            walk(k + 1);
        }
        partial = saved;
    };
    if (d == 1) {
        // degenerate: single coordinate
        std::fill(forbidden.begin(), forbidden.end(), 0);
        int free_values = static_cast<int>(q);
        for (int h = 0; h < H; ++h) {
            uint32_t v = f.mul(ma.rows[h][1], f.inv(ma.rows[h][0]));
            uint64_t& word = forbidden[v >> 6];
            uint64_t bit = 1ull << (v & 63);
            if (!(word & bit)) {
                word |= bit;
                --free_values;
            }
        }
        return free_values;
    }
    walk(0);
    return total;
}

} // namespace homlin
