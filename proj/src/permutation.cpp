#include "homlin/permutation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace homlin {

namespace {

bool ground_is_one_to(const std::vector<int>& ground, int* n_out) {
    for (size_t i = 0; i < ground.size(); ++i)
        if (ground[i] != static_cast<int>(i) + 1) return false;
    *n_out = static_cast<int>(ground.size());
    return true;
}

} // namespace

Permutation Permutation::identity(std::vector<int> ground) {
    std::sort(ground.begin(), ground.end());
    Permutation p;
    p.images_ = ground;
    p.ground_ = std::move(ground);
    p.rebuild_cycles();
    return p;
}

Permutation Permutation::from_cycles(std::vector<std::vector<int>> cycles, std::vector<int> ground) {
    std::set<int> seen;
    for (const auto& cyc : cycles) {
        if (cyc.empty()) throw DomainError("empty cycle");
        for (int e : cyc) {
            if (e <= 0) throw DomainError("permutation elements must be positive");
            if (!seen.insert(e).second) throw DomainError("cycles are not disjoint");
        }
    }
    if (ground.empty()) {
        ground.assign(seen.begin(), seen.end());
    } else {
        std::sort(ground.begin(), ground.end());
        for (int e : seen)
            if (!std::binary_search(ground.begin(), ground.end(), e))
                throw DomainError("cycle element outside ground");
        for (int e : ground)
            if (!seen.count(e)) cycles.push_back({e}); // omitted fixed points
    }
    Permutation p;
    p.ground_ = std::move(ground);
    p.images_.assign(p.ground_.size(), 0);
    for (const auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i) {
            int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
            size_t idx = std::lower_bound(p.ground_.begin(), p.ground_.end(), from) - p.ground_.begin();
            p.images_[idx] = to;
        }
    p.rebuild_cycles();
    return p;
}

Permutation Permutation::from_images(const std::vector<int>& ground, const std::vector<int>& images) {
    if (ground.size() != images.size()) throw DomainError("ground/image size mismatch");
    Permutation p;
    p.ground_ = ground;
    std::sort(p.ground_.begin(), p.ground_.end());
    p.images_.assign(p.ground_.size(), 0);
    std::set<int> seen;
    for (size_t i = 0; i < ground.size(); ++i) {
        size_t idx = std::lower_bound(p.ground_.begin(), p.ground_.end(), ground[i]) - p.ground_.begin();
        if (idx >= p.ground_.size() || p.ground_[idx] != ground[i]) throw DomainError("bad ground");
        if (!std::binary_search(p.ground_.begin(), p.ground_.end(), images[i]))
            throw DomainError("image outside ground");
        if (!seen.insert(images[i]).second) throw DomainError("images are not distinct");
        p.images_[idx] = images[i];
    }
    p.rebuild_cycles();
    return p;
}

int Permutation::image_of(int i) const {
    auto it = std::lower_bound(ground_.begin(), ground_.end(), i);
    if (it == ground_.end() || *it != i) throw DomainError("element not in ground");
    return images_[it - ground_.begin()];
}

std::vector<int> Permutation::one_line() const { return images_; }

void Permutation::rebuild_cycles() {
    cycles_.clear();
    if (ground_.empty()) return;
    const int maxg = ground_.back();
    std::set<int> todo(ground_.begin(), ground_.end());
    while (!todo.empty()) {
        int start = *todo.begin();
        std::vector<int> cyc;
        int x = start;
        do {
            cyc.push_back(x);
            todo.erase(x);
            x = image_of(x);
        } while (x != start);
        // Canonical rotation: the cycle containing the ground maximum is
        // written ending at it; every other cycle starts at its minimum.
        auto maxit = std::find(cyc.begin(), cyc.end(), maxg);
        if (maxit != cyc.end()) {
            std::rotate(cyc.begin(), maxit + 1 == cyc.end() ? cyc.begin() : maxit + 1, cyc.end());
        } // starting at the minimum is automatic: we begin cycles at the smallest unseen element
        cycles_.push_back(std::move(cyc));
    }
    std::sort(cycles_.begin(), cycles_.end(), [](const auto& a, const auto& b) {
        return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
    });
}

std::string Permutation::to_string() const {
    if (cycles_.empty()) return "()";
    std::ostringstream out;
    for (const auto& cyc : cycles_) {
        out << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) out << ',';
            out << cyc[i];
        }
        out << ')';
    }
    return out.str();
}

LabeledPermutation::LabeledPermutation(Permutation base, std::vector<int> labels, int modulus)
    : base_(std::move(base)), labels_(std::move(labels)), modulus_(modulus) {
    if (modulus_ < 1) throw ParameterError("modulus must be >= 1");
    if (labels_.size() != base_.ground().size()) throw DomainError("label vector size mismatch");
    for (int l : labels_)
        if (l < 0 || l >= modulus_) throw DomainError("label out of range");
    for (int e : forced_zero_elements(base_))
        if (label_of(e) != 0) throw DomainError("forced-zero element carries a nonzero label");
}

int LabeledPermutation::label_of(int elem) const {
    const auto& g = base_.ground();
    auto it = std::lower_bound(g.begin(), g.end(), elem);
    if (it == g.end() || *it != elem) throw DomainError("element not in ground");
    return labels_[it - g.begin()];
}

std::string LabeledPermutation::to_string() const {
    if (base_.cycles().empty()) return "()";
    std::ostringstream out;
    for (const auto& cyc : base_.cycles()) {
        out << '(';
        for (size_t i = 0; i < cyc.size(); ++i) {
            if (i) out << ',';
            out << cyc[i] << '^' << label_of(cyc[i]);
        }
        out << ')';
    }
    return out.str();
}

bool is_d_permutation(const Permutation& sigma) {
    for (int i : sigma.ground()) {
        int v = sigma.image_of(i);
        if (i % 2 == 1 && !(i <= v)) return false;
        if (i % 2 == 0 && !(i >= v)) return false;
    }
    return true;
}

namespace {

int require_even_ground(const Permutation& sigma, const char* what) {
    int n = 0;
    if (!ground_is_one_to(sigma.ground(), &n) || n % 2 != 0)
        throw ParameterError(std::string(what) + " requires ground [2n]");
    return n;
}

} // namespace

bool is_dumont(const Permutation& sigma) {
    int n2 = require_even_ground(sigma, "is_dumont");
    for (int i = 1; i <= n2 / 2; ++i) {
        if (!(2 * i > sigma.image_of(2 * i))) return false;
        if (!(2 * i - 1 <= sigma.image_of(2 * i - 1))) return false;
    }
    return true;
}

bool is_dumont_derangement(const Permutation& sigma) {
    int n2 = require_even_ground(sigma, "is_dumont_derangement");
    for (int i = 1; i <= n2 / 2; ++i) {
        if (!(2 * i > sigma.image_of(2 * i))) return false;
        if (!(2 * i - 1 < sigma.image_of(2 * i - 1))) return false;
    }
    return true;
}

std::vector<int> forced_zero_elements(const Permutation& sigma) {
    std::set<int> forced;
    if (sigma.ground().empty()) return {};
    const int maxg = sigma.ground().back();
    for (const auto& cyc : sigma.cycles()) {
        forced.insert(*std::min_element(cyc.begin(), cyc.end()));
        if (std::find(cyc.begin(), cyc.end(), maxg) != cyc.end()) {
            // Canonical form already writes this cycle ending at the maximum;
            // collect right-to-left minima of the word.
            int running = maxg + 1;
            for (auto it = cyc.rbegin(); it != cyc.rend(); ++it)
                if (*it < running) {
                    running = *it;
                    forced.insert(*it);
                }
        }
    }
    return {forced.begin(), forced.end()};
}

SetPartition cycle_support(const Permutation& sigma) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(sigma.cycles().size());
    for (const auto& cyc : sigma.cycles()) blocks.push_back(cyc);
    return SetPartition::from_blocks(std::move(blocks));
}

PermFamily perm_family_from_string(const std::string& name) {
    if (name == "dumont") return PermFamily::dumont;
    if (name == "dumont_derangement") return PermFamily::dumont_derangement;
    if (name == "dperm") return PermFamily::dperm;
    if (name == "dcycle") return PermFamily::dcycle;
    if (name == "labeled_dperm") return PermFamily::labeled_dperm;
    if (name == "labeled_dcycle") return PermFamily::labeled_dcycle;
    if (name == "descent_class") return PermFamily::descent_class;
    throw ParameterError("unknown permutation family: " + name);
}

std::string to_string(PermFamily f) {
    switch (f) {
        case PermFamily::dumont: return "dumont";
        case PermFamily::dumont_derangement: return "dumont_derangement";
        case PermFamily::dperm: return "dperm";
        case PermFamily::dcycle: return "dcycle";
        case PermFamily::labeled_dperm: return "labeled_dperm";
        case PermFamily::labeled_dcycle: return "labeled_dcycle";
        case PermFamily::descent_class: return "descent_class";
    }
    throw ParameterError("unknown permutation family");
}

namespace {

// Depth-first assignment of sigma(ground[pos]) with per-family pruning on the
// admissible image set.  Values are tried ascending, so emission order is
// lexicographic on the one-line word.
struct FamilyEnumerator {
    PermFamily family;
    std::vector<int> ground;
    std::vector<int> images;     // by position
    std::vector<bool> used;      // by ground index
    const std::function<void(const Permutation&)>* emit;

    bool admissible(int elem, int value, int prev_value) const {
        switch (family) {
            case PermFamily::dumont:
                return elem % 2 == 1 ? elem <= value : elem > value;
            case PermFamily::dumont_derangement:
                return elem % 2 == 1 ? elem < value : elem > value;
            case PermFamily::dperm:
            case PermFamily::dcycle:
                return elem % 2 == 1 ? elem <= value : elem >= value;
            case PermFamily::descent_class:
                // descent in the one-line word only when (even, odd)
                return prev_value <= value || (prev_value % 2 == 0 && value % 2 == 1);
            default:
                throw ParameterError("enumerate_family: labeled family passed");
        }
    }

    // For the single-cycle family: following assigned images from v must not
    // return to the current chain start unless the permutation is complete.
    int chase(int v) const {
        while (true) {
            auto it = std::lower_bound(ground.begin(), ground.end(), v);
            size_t idx = it - ground.begin();
            if (images[idx] == 0) return v;
            v = images[idx];
        }
    }

    void run(size_t pos) {
        if (pos == ground.size()) {
            Permutation p = Permutation::from_images(ground, images_in_ground_order());
            if (family != PermFamily::dcycle || p.cycle_count() == 1) (*emit)(p);
            return;
        }
        int elem = ground[pos];
        int prev = pos == 0 ? 0 : images[pos - 1];
        for (size_t vi = 0; vi < ground.size(); ++vi) {
            if (used[vi]) continue;
            int value = ground[vi];
            if (!admissible(elem, value, prev)) continue;
            if (family == PermFamily::dcycle && value != elem) {
                // closing a cycle early is only allowed at the last position
                if (pos + 1 < ground.size() && chase(value) == elem) continue;
            }
            if (family == PermFamily::dcycle && value == elem && ground.size() > 1) continue;
            used[vi] = true;
            images[pos] = value;
            run(pos + 1);
            images[pos] = 0;
            used[vi] = false;
        }
    }

    std::vector<int> images_in_ground_order() const { return images; }
};

} // namespace

void enumerate_family(PermFamily family, const std::vector<int>& ground_in,
                      const std::function<void(const Permutation&)>& emit) {
    std::vector<int> ground = ground_in;
    std::sort(ground.begin(), ground.end());
    if (std::adjacent_find(ground.begin(), ground.end()) != ground.end())
        throw ParameterError("ground has repeated elements");
    if (!ground.empty() && ground.front() <= 0)
        throw ParameterError("ground elements must be positive");

    switch (family) {
        case PermFamily::dumont:
        case PermFamily::dumont_derangement:
        case PermFamily::descent_class: {
            int n = 0;
            if (!ground_is_one_to(ground, &n) || n % 2 != 0)
                throw ParameterError(to_string(family) + " requires ground [2n]");
            break;
        }
        case PermFamily::dperm:
        case PermFamily::dcycle:
            break;
        default:
            throw ParameterError("use enumerate_labeled_family for labeled families");
    }

    if (ground.empty()) {
        if (family != PermFamily::dcycle) emit(Permutation{});
        return;
    }
    FamilyEnumerator e;
    e.family = family;
    e.ground = ground;
    e.images.assign(ground.size(), 0);
    e.used.assign(ground.size(), false);
    e.emit = &emit;
    e.run(0);
}

void enumerate_labeled_family(PermFamily family, int two_n, int modulus,
                              const std::function<void(const LabeledPermutation&)>& emit) {
    if (family != PermFamily::labeled_dperm && family != PermFamily::labeled_dcycle)
        throw ParameterError("enumerate_labeled_family expects a labeled family");
    if (two_n < 2 || two_n % 2 != 0) throw ParameterError("labeled families require ground [2n]");
    if (modulus < 1) throw ParameterError("modulus must be >= 1");
    PermFamily base =
        family == PermFamily::labeled_dperm ? PermFamily::dperm : PermFamily::dcycle;
    std::vector<int> ground(two_n);
    for (int i = 0; i < two_n; ++i) ground[i] = i + 1;

    enumerate_family(base, ground, [&](const Permutation& p) {
        std::vector<int> forced = forced_zero_elements(p);
        std::vector<size_t> free_idx;
        for (size_t i = 0; i < ground.size(); ++i)
            if (!std::binary_search(forced.begin(), forced.end(), ground[i]))
                free_idx.push_back(i);
        std::vector<int> labels(ground.size(), 0);
        std::function<void(size_t)> rec = [&](size_t k) {
            if (k == free_idx.size()) {
                emit(LabeledPermutation(p, labels, modulus));
                return;
            }
            for (int l = 0; l < modulus; ++l) {
                labels[free_idx[k]] = l;
                rec(k + 1);
            }
            labels[free_idx[k]] = 0;
        };
        rec(0);
    });
}

void CountTable::validate() const {
    if (by_cycles.empty()) return;
    Int sum = 0;
    for (const auto& [k, v] : by_cycles) sum += v;
    if (sum != count) throw IntegrityError("CountTable: by_cycles does not sum to count");
}

CountTable count_family(PermFamily family, const std::vector<int>& ground, int modulus) {
    CountTable t;
    t.family = family;
    t.n = ground.empty() ? 0 : *std::max_element(ground.begin(), ground.end());
    t.modulus = modulus;
    if (family == PermFamily::labeled_dperm || family == PermFamily::labeled_dcycle) {
        enumerate_labeled_family(family, static_cast<int>(ground.size()), modulus,
                                 [&](const LabeledPermutation& lp) {
                                     t.count += 1;
                                     t.by_cycles[lp.base().cycle_count()] += 1;
                                 });
    } else {
        enumerate_family(family, ground, [&](const Permutation& p) {
            t.count += 1;
            t.by_cycles[p.cycle_count()] += 1;
        });
    }
    t.validate();
    return t;
}

namespace {

std::vector<int> one_to(int n) {
    std::vector<int> g(n);
    for (int i = 0; i < n; ++i) g[i] = i + 1;
    return g;
}

} // namespace

Int genocchi(int n) {
    if (n < 1) throw ParameterError("genocchi requires n >= 1");
    Int c = 0;
    enumerate_family(PermFamily::dumont, one_to(2 * n - 2), [&](const Permutation&) { c += 1; });
    return c;
}

Int median_genocchi(int n) {
    if (n < 0) throw ParameterError("median_genocchi requires n >= 0");
    Int c = 0;
    enumerate_family(PermFamily::dumont_derangement, one_to(2 * n + 2),
                     [&](const Permutation&) { c += 1; });
    return c;
}

Int count_descent_class(int n) {
    if (n < 1) throw ParameterError("count_descent_class requires n >= 1");
    Int c = 0;
    enumerate_family(PermFamily::descent_class, one_to(2 * n), [&](const Permutation&) { c += 1; });
    return c;
}

} // namespace homlin
