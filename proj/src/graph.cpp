#include "annulus/graph.hpp"

#include "annulus/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

namespace annulus {

namespace {

using boost::multiprecision::cpp_int;

cpp_int parse_integer(const std::string& digits) {
    if (digits.empty()) throw DomainError("parse_rational: empty number");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw DomainError("parse_rational: bad digit in '" + digits + "'");
        }
    }
    return cpp_int(digits);
}

std::int64_t clamp_to_int64(const cpp_int& v) {
    static const cpp_int lo = std::numeric_limits<std::int64_t>::min();
    static const cpp_int hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo) return std::numeric_limits<std::int64_t>::min();
    if (v > hi) return std::numeric_limits<std::int64_t>::max();
    return static_cast<std::int64_t>(v);
}

cpp_int floor_div(const Rational& q) {
    cpp_int num = boost::multiprecision::numerator(q);
    cpp_int den = boost::multiprecision::denominator(q);
    cpp_int quo = num / den;
    if (num < 0 && quo * den != num) quo -= 1;
    return quo;
}

cpp_int ceil_div(const Rational& q) {
    cpp_int f = floor_div(q);
    return Rational(f) == q ? f : f + 1;
}

} // namespace

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw DomainError("parse_rational: empty input");
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) throw DomainError("parse_rational: zero denominator");
        return num / den;
    }
    bool negative = false;
    std::size_t pos = 0;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string mantissa = s.substr(pos);
    long exponent = 0;
    if (auto e = mantissa.find_first_of("eE"); e != std::string::npos) {
        try {
            exponent = std::stol(mantissa.substr(e + 1));
        } catch (const std::exception&) {
            throw DomainError("parse_rational: bad exponent in '" + text + "'");
        }
        mantissa = mantissa.substr(0, e);
    }
    std::string int_part = mantissa;
    std::string frac_part;
    if (auto dot = mantissa.find('.'); dot != std::string::npos) {
        int_part = mantissa.substr(0, dot);
        frac_part = mantissa.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw DomainError("parse_rational: no digits in '" + text + "'");
    const cpp_int digits = parse_integer(int_part + frac_part);
    exponent -= static_cast<long>(frac_part.size());
    if (std::abs(exponent) > 4000) throw DomainError("parse_rational: exponent out of range");
    Rational value(digits);
    const cpp_int ten_pow = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(std::abs(exponent)));
    value = exponent >= 0 ? value * Rational(ten_pow) : value / Rational(ten_pow);
    return negative ? -value : value;
}

std::string to_string(const Rational& q) {
    const cpp_int den = boost::multiprecision::denominator(q);
    if (den == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

std::string to_string(ArithmeticMode mode) {
    return mode == ArithmeticMode::Float ? "float" : "exact-integer";
}

ArithmeticMode parse_mode(const std::string& text) {
    if (text == "float") return ArithmeticMode::Float;
    if (text == "exact-integer") return ArithmeticMode::ExactInteger;
    throw DomainError("unknown arithmetic mode '" + text + "'");
}

// ── AnnulusInstance ─────────────────────────────────────────────

void AnnulusInstance::validate() const {
    if (dim < 1) throw DomainError("instance: dim must be >= 1");
    if (!std::isfinite(r1) || !std::isfinite(r2) || r1 < 0.0 || r2 < r1 || !(r2 > 0.0)) {
        throw DomainError("instance: radii must satisfy r2 >= r1 >= 0 and r2 > 0");
    }
    for (const auto& p : points) {
        if (p.size() != static_cast<std::size_t>(dim)) {
            throw DimensionMismatch("instance: point dimension differs from dim");
        }
        for (double x : p) {
            if (!std::isfinite(x)) throw DomainError("instance: non-finite coordinate");
        }
    }
    if (mode == ArithmeticMode::ExactInteger) {
        if (!lattice) throw DomainError("instance: exact-integer mode without lattice data");
        if (lattice->scale <= 0) throw DomainError("instance: lattice scale must be positive");
        if (lattice->coords.size() != points.size()) throw DomainError("instance: lattice/point count mismatch");
        for (const auto& k : lattice->coords) {
            if (k.size() != static_cast<std::size_t>(dim)) {
                throw DimensionMismatch("instance: lattice coordinate dimension differs from dim");
            }
        }
    }
}

AnnulusInstance AnnulusInstance::from_points(int dim, double r1, double r2, std::vector<Point> points) {
    AnnulusInstance inst;
    inst.dim = dim;
    inst.r1 = r1;
    inst.r2 = r2;
    inst.points = std::move(points);
    inst.validate();
    return inst;
}

AnnulusInstance AnnulusInstance::from_lattice(int dim, double r1, double r2, Rational scale,
                                              std::vector<std::vector<std::int64_t>> coords) {
    AnnulusInstance inst;
    inst.dim = dim;
    inst.r1 = r1;
    inst.r2 = r2;
    inst.mode = ArithmeticMode::ExactInteger;
    const double step = static_cast<double>(scale);
    inst.points.reserve(coords.size());
    for (const auto& k : coords) {
        Point p;
        p.reserve(k.size());
        for (auto v : k) p.push_back(static_cast<double>(v) * step);
        inst.points.push_back(std::move(p));
    }
    inst.lattice = ExactLattice{std::move(scale), std::move(coords)};
    inst.validate();
    return inst;
}

// ── Graph ───────────────────────────────────────────────────────

Graph::Graph(std::size_t n) : n_(n), adj_(n), matrix_(n, std::vector<bool>(n, false)) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= n_ || v >= n_) throw DomainError("graph: vertex index out of range");
    if (u == v) throw DomainError("graph: self-loops are not allowed");
    if (matrix_[u][v]) return;
    matrix_[u][v] = matrix_[v][u] = true;
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
    ++edge_count_;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const { return matrix_[u][v]; }

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(edge_count_);
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (std::size_t u = 0; u < n_; ++u) {
        for (std::size_t v = u + 1; v < n_; ++v) {
            if (!matrix_[u][v]) g.add_edge(u, v);
        }
    }
    return g;
}

bool Graph::operator==(const Graph& other) const { return n_ == other.n_ && matrix_ == other.matrix_; }

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

Graph Graph::cycle(std::size_t n) {
    Graph g(n);
    for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    if (n > 2) g.add_edge(n - 1, 0);
    return g;
}

// ── build_graph ─────────────────────────────────────────────────

Graph build_graph(const AnnulusInstance& inst, BuildOptions opts) {
    inst.validate();
    const std::size_t n = inst.size();
    Graph g(n);

    if (inst.mode == ArithmeticMode::ExactInteger) {
        // |k_u - k_v|^2 * scale^2 in [r1^2, r2^2]  <=>  lo <= |k_u - k_v|^2 <= hi
        const Rational scale_sq = inst.lattice->scale * inst.lattice->scale;
        const Rational r1_sq = Rational(inst.r1) * Rational(inst.r1);
        const Rational r2_sq = Rational(inst.r2) * Rational(inst.r2);
        const std::int64_t lo = clamp_to_int64(ceil_div(r1_sq / scale_sq));
        const std::int64_t hi = clamp_to_int64(floor_div(r2_sq / scale_sq));
        const auto& k = inst.lattice->coords;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                __int128 s = 0;
                for (int c = 0; c < inst.dim; ++c) {
                    const __int128 diff = static_cast<__int128>(k[u][c]) - k[v][c];
                    s += diff * diff;
                }
                if (s >= lo && s <= hi) g.add_edge(u, v);
            }
        }
        return g;
    }

    const double tau = opts.tolerance;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            const double d = dist(inst.points[u], inst.points[v]);
            if (opts.strict_boundaries &&
                ((inst.r1 > 0.0 && std::abs(d - inst.r1) < tau) || std::abs(d - inst.r2) < tau)) {
                throw BoundaryAmbiguity("build_graph: pair (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") lies within tolerance of a radius");
            }
            if (d >= inst.r1 - tau && d <= inst.r2 + tau) g.add_edge(u, v);
        }
    }
    return g;
}

std::size_t count_boundary_pairs(const AnnulusInstance& inst, double tolerance) {
    if (inst.mode == ArithmeticMode::ExactInteger) return 0;
    std::size_t count = 0;
    for (std::size_t u = 0; u < inst.size(); ++u) {
        for (std::size_t v = u + 1; v < inst.size(); ++v) {
            const double d = dist(inst.points[u], inst.points[v]);
            if ((inst.r1 > 0.0 && std::abs(d - inst.r1) < tolerance) || std::abs(d - inst.r2) < tolerance) {
                ++count;
            }
        }
    }
    return count;
}

} // namespace annulus
