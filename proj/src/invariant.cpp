#include "tribracket/invariant.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <queue>
#include <thread>

#include "tribracket/errors.hpp"

namespace tribracket {

InvariantPolynomial::InvariantPolynomial(std::int64_t modulus) : modulus_(modulus) {
    if (modulus < 2) throw ParseError("modulus must be at least 2");
}

void InvariantPolynomial::add(std::int64_t exponent, std::uint64_t multiplicity) {
    if (!multiplicity) return;
    std::int64_t e = exponent % modulus_;
    if (e < 0) e += modulus_;
    terms_[e] += multiplicity;
}

void InvariantPolynomial::merge(const InvariantPolynomial& o) {
    if (o.modulus_ != modulus_) throw ModulusMismatch("cannot merge polynomials over different moduli");
    for (auto [e, k] : o.terms_) terms_[e] += k;
}

std::uint64_t InvariantPolynomial::total() const {
    std::uint64_t t = 0;
    for (auto [e, k] : terms_) t += k;
    return t;
}

std::vector<std::int64_t> InvariantPolynomial::multiset() const {
    std::vector<std::int64_t> out;
    for (auto [e, k] : terms_) out.insert(out.end(), k, e);
    return out;
}

std::string InvariantPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, k] = *it;
        if (!s.empty()) s += '+';
        if (e == 0) {
            s += std::to_string(k);
            continue;
        }
        if (k != 1) s += std::to_string(k);
        s += 'u';
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

nlohmann::json InvariantPolynomial::to_json() const {
    nlohmann::json terms = nlohmann::json::object();
    for (auto [e, k] : terms_) terms[std::to_string(e)] = k;
    return {{"modulus", modulus_}, {"terms", terms}};
}

InvariantPolynomial InvariantPolynomial::parse(const std::string& text, std::int64_t modulus) {
    InvariantPolynomial p(modulus);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s == "0") return p;
    std::size_t i = 0;
    auto number = [&](std::size_t& j) -> std::int64_t {
        std::size_t start = j;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (start == j) return -1;
        return std::stoll(s.substr(start, j - start));
    };
    while (i < s.size()) {
        std::int64_t coeff = number(i);
        std::int64_t exp = 0;
        if (i < s.size() && s[i] == 'u') {
            ++i;
            exp = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                exp = number(i);
                if (exp < 0) throw ParseError("missing exponent in '" + text + "'");
            }
            if (coeff < 0) coeff = 1;
        } else if (coeff < 0) {
            throw ParseError("malformed polynomial '" + text + "'");
        }
        if (i < s.size()) {
            if (s[i] != '+') throw ParseError("malformed polynomial '" + text + "'");
            ++i;
            if (i == s.size()) throw ParseError("trailing '+' in '" + text + "'");
        }
        p.add(exp, static_cast<std::uint64_t>(coeff));
    }
    return p;
}

namespace {

class ColoringSearch {
public:
    ColoringSearch(const LinkDiagram& d, const Tribracket& X) : d_(d), X_(X), n_(X.size()) {
        const int F = static_cast<int>(d.faces.size());
        const int c = d.crossings();
        face_crossings_.assign(F, {});
        for (int x = 0; x < c; ++x)
            for (int r = 0; r < 4; ++r) {
                auto& v = face_crossings_[d.roles[x][r]];
                if (v.empty() || v.back() != x) v.push_back(x);
            }
        // Faces in breadth-first order over crossings, free faces last.
        std::vector<char> placed(F, 0), seen(c, 0);
        for (int start = 0; start < c; ++start) {
            if (seen[start]) continue;
            std::queue<int> q;
            q.push(start);
            seen[start] = 1;
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int r = 0; r < 4; ++r) {
                    int f = d.roles[x][r];
                    if (!placed[f]) {
                        placed[f] = 1;
                        order_.push_back(f);
                    }
                    for (int y : face_crossings_[f])
                        if (!seen[y]) {
                            seen[y] = 1;
                            q.push(y);
                        }
                }
            }
        }
        for (int f = 0; f < F; ++f)
            if (!placed[f]) order_.push_back(f);

        auto at = [&](int p, int q, int r) { return ((p - 1) * n_ + (q - 1)) * n_ + (r - 1); };
        left_.assign(n_ * n_ * n_, 0);
        center_.assign(n_ * n_ * n_, 0);
        right_.assign(n_ * n_ * n_, 0);
        for (int a = 1; a <= n_; ++a)
            for (int b = 1; b <= n_; ++b)
                for (int c2 = 1; c2 <= n_; ++c2) {
                    int v = X(a, b, c2);
                    left_[at(b, c2, v)] = a;
                    center_[at(a, c2, v)] = b;
                    right_[at(a, b, v)] = c2;
                }
        col_.assign(F, 0);
    }

    std::vector<Coloring> run() {
        dfs(0);
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    int idx(int p, int q, int r) const { return ((p - 1) * n_ + (q - 1)) * n_ + (r - 1); }

    bool assign(int f, int v, std::vector<int>& trail) {
        std::vector<int> queue{f};
        col_[f] = v;
        trail.push_back(f);
        while (!queue.empty()) {
            int g = queue.back();
            queue.pop_back();
            for (int x : face_crossings_[g]) {
                const auto& r = d_.roles[x];
                int val[4], unknown = -1, holes = 0;
                for (int k = 0; k < 4; ++k) {
                    val[k] = col_[r[k]];
                    if (!val[k]) {
                        ++holes;
                        unknown = k;
                    }
                }
                if (holes == 0) {
                    if (X_(val[0], val[1], val[2]) != val[3]) return false;
                    continue;
                }
                // A face filling two roles is left to the branching step.
                if (holes != 1) continue;
                int forced = 0;
                switch (unknown) {
                    case 0: forced = left_[idx(val[1], val[2], val[3])]; break;
                    case 1: forced = center_[idx(val[0], val[2], val[3])]; break;
                    case 2: forced = right_[idx(val[0], val[1], val[3])]; break;
                    default: forced = X_(val[0], val[1], val[2]); break;
                }
                col_[r[unknown]] = forced;
                trail.push_back(r[unknown]);
                queue.push_back(r[unknown]);
            }
        }
        return true;
    }

    void dfs(std::size_t pos) {
        while (pos < order_.size() && col_[order_[pos]]) ++pos;
        if (pos == order_.size()) {
            out_.push_back(col_);
            return;
        }
        int f = order_[pos];
        for (int v = 1; v <= n_; ++v) {
            std::vector<int> trail;
            if (assign(f, v, trail)) dfs(pos + 1);
            for (int g : trail) col_[g] = 0;
        }
    }

    const LinkDiagram& d_;
    const Tribracket& X_;
    int n_;
    std::vector<std::vector<int>> face_crossings_;
    std::vector<int> order_;
    std::vector<int> left_, center_, right_;
    Coloring col_;
    std::vector<Coloring> out_;
};

}  // namespace

std::vector<Coloring> enumerate_colorings(const LinkDiagram& d, const Tribracket& X) {
    return ColoringSearch(d, X).run();
}

std::uint64_t counting_invariant(const LinkDiagram& d, const Tribracket& X) {
    return enumerate_colorings(d, X).size();
}

StateSum::StateSum(const LinkDiagram& d) : d_(d) {
    for (const auto& s : enumerate_states(d)) {
        loops_.push_back(s.loops);
        max_loops_ = std::max(max_loops_, s.loops);
    }
}

std::int64_t StateSum::beta(const Bracket& br, const Coloring& col) const {
    const ModulusRing& r = br.ring();
    const int c = d_.crossings();
    if (static_cast<int>(col.size()) != static_cast<int>(d_.faces.size()))
        throw ParseError("coloring does not match the diagram");
    // coeff[x][0] for the oriented smoothing, coeff[x][1] for the disoriented one.
    std::vector<std::array<std::int64_t, 2>> coeff(c);
    for (int x = 0; x < c; ++x) {
        const auto& ro = d_.roles[x];
        int a = col[ro[kA]], b = col[ro[kB]], cc = col[ro[kC]];
        std::int64_t A = br.A(a, b, cc), B = br.B(a, b, cc);
        if (d_.signs[x] > 0)
            coeff[x] = {A, B};
        else
            coeff[x] = {r.inv(A), r.inv(B)};
    }
    std::vector<std::int64_t> dpow(max_loops_ + 1);
    dpow[0] = r.reduce(1);
    for (int k = 1; k <= max_loops_; ++k) dpow[k] = r.mul(dpow[k - 1], br.delta());
    std::int64_t sum = 0;
    for (std::size_t s = 0; s < loops_.size(); ++s) {
        std::int64_t term = dpow[loops_[s]];
        for (int x = 0; x < c; ++x) term = r.mul(term, coeff[x][s >> x & 1u]);
        sum = r.add(sum, term);
    }
    return r.mul(r.pow(br.w(), d_.negative - d_.positive), sum);
}

std::int64_t beta(const LinkDiagram& d, const Bracket& br, const Coloring& col) {
    return StateSum(d).beta(br, col);
}

InvariantPolynomial phi(const LinkDiagram& d, const Bracket& br, unsigned workers) {
    auto colorings = enumerate_colorings(d, br.tribracket());
    StateSum ss(d);
    unsigned w = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(colorings.size())));
    std::vector<InvariantPolynomial> parts(w, InvariantPolynomial(br.ring().modulus()));
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned id) {
        for (std::size_t i; (i = next++) < colorings.size();) parts[id].add(ss.beta(br, colorings[i]));
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < w; ++i) pool.emplace_back(worker, i);
    worker(0);
    for (auto& th : pool) th.join();
    InvariantPolynomial total(br.ring().modulus());
    for (const auto& p : parts) total.merge(p);
    return total;
}

std::vector<std::int64_t> phi_multiset(const LinkDiagram& d, const Bracket& br) {
    return phi(d, br).multiset();
}

}  // namespace tribracket
