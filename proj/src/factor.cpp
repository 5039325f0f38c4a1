#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>

#include "pg/errors.hpp"
#include "pg/homothetical.hpp"

namespace pg {

std::string_view factor_kind_name(FactorKind k) {
    switch (k) {
        case FactorKind::Const: return "const";
        case FactorKind::Poly: return "poly";
        case FactorKind::Pow: return "pow";
        case FactorKind::Exp: return "exp";
        case FactorKind::Sin: return "sin";
        case FactorKind::Cos: return "cos";
        case FactorKind::Sinh: return "sinh";
        case FactorKind::Cosh: return "cosh";
        case FactorKind::Log: return "log";
        case FactorKind::PowerFam: return "powerfam";
        case FactorKind::TanForm: return "tanform";
        case FactorKind::LogTrig: return "logtrig";
        case FactorKind::AsinhForm: return "asinhform";
        case FactorKind::AtanhExpForm: return "atanhexpform";
    }
    return "?";
}

namespace {

[[noreturn]] void bad_params(FactorKind k, const char* what) {
    throw Error(std::string(factor_kind_name(k)) + ": " + what);
}

void require_arity(FactorKind k, std::size_t got, std::size_t lo, std::size_t hi) {
    if (got < lo || got > hi) bad_params(k, "wrong number of parameters");
}

} // namespace

FactorFn::FactorFn(FactorKind k, std::vector<double> p) : kind(k), params(std::move(p)) {
    for (double x : params)
        if (!std::isfinite(x)) bad_params(kind, "non-finite parameter");
    switch (kind) {
        case FactorKind::Const:
            require_arity(kind, params.size(), 1, 1);
            break;
        case FactorKind::Poly:
            if (params.empty()) bad_params(kind, "needs at least one coefficient");
            break;
        case FactorKind::Pow:
        case FactorKind::Exp:
        case FactorKind::Sin:
        case FactorKind::Cos:
        case FactorKind::Sinh:
        case FactorKind::Cosh:
            require_arity(kind, params.size(), 1, 2);
            break;
        case FactorKind::Log: {
            require_arity(kind, params.size(), 1, 2);
            const double b = params.size() > 1 ? params[1] : 1.0;
            if (b == 0) bad_params(kind, "scale b must be nonzero");
            if (b > 0)
                lo = 0;
            else
                hi = 0;
            break;
        }
        case FactorKind::PowerFam: {
            require_arity(kind, params.size(), 3, 3);
            const double m = params[0], n = params[1], l = params[2];
            if (m == 0 || m == 1) bad_params(kind, "m must differ from 0 and 1");
            if (n == 0) bad_params(kind, "n must be nonzero");
            const double slope = (1 - m) * n; // base = slope*v + l must stay positive
            if (slope > 0)
                lo = -l / slope;
            else
                hi = -l / slope;
            break;
        }
        case FactorKind::TanForm: {
            require_arity(kind, params.size(), 3, 4);
            if (!(params[0] > 0)) bad_params(kind, "c must be positive");
            if (params[1] == 0) bad_params(kind, "lam must be nonzero");
            break;
        }
        case FactorKind::LogTrig: {
            require_arity(kind, params.size(), 3, 3);
            if (params[0] < 0) bad_params(kind, "ct must be nonnegative");
            lo = 0;
            break;
        }
        case FactorKind::AsinhForm: {
            require_arity(kind, params.size(), 3, 4);
            if (!(params[0] > 0)) bad_params(kind, "c must be positive");
            if (params[1] == 0) bad_params(kind, "lam must be nonzero");
            if (params.size() == 4) {
                const double variant = params[3];
                if (variant != 1 && variant != 2) bad_params(kind, "k must be 1 or 2");
                if (variant == 2) {
                    lo = -2 / std::abs(params[1]);
                    hi = 2 / std::abs(params[1]);
                }
            }
            break;
        }
        case FactorKind::AtanhExpForm: {
            require_arity(kind, params.size(), 5, 5);
            const double l1 = params[0], l3 = params[1];
            if (l1 == 0 || l3 == 0) bad_params(kind, "l1 and l3 must be nonzero");
            if (!(l3 * l1 * l1 + l3 * l3 * l1 > 0))
                bad_params(kind, "l3 l1^2 + l3^2 l1 must be positive");
            // remaining validity is point-dependent; checked at evaluation
            break;
        }
    }
}

Jet1 FactorFn::eval(double v) const {
    const Jet1 x = Jet1::variable(v);
    switch (kind) {
        case FactorKind::Const:
            return Jet1::constant(params[0]);
        case FactorKind::Poly: {
            Jet1 acc = Jet1::constant(params.back());
            for (std::size_t i = params.size() - 1; i-- > 0;) acc = acc * x + params[i];
            return acc;
        }
        case FactorKind::Pow: {
            const double c = params.size() > 1 ? params[1] : 1.0;
            return c * pow(x, params[0]);
        }
        case FactorKind::Exp: {
            const double d = params.size() > 1 ? params[1] : 1.0;
            return params[0] * exp(d * x);
        }
        case FactorKind::Sin: {
            const double b = params.size() > 1 ? params[1] : 1.0;
            return params[0] * sin(b * x);
        }
        case FactorKind::Cos: {
            const double b = params.size() > 1 ? params[1] : 1.0;
            return params[0] * cos(b * x);
        }
        case FactorKind::Sinh: {
            const double b = params.size() > 1 ? params[1] : 1.0;
            return params[0] * sinh(b * x);
        }
        case FactorKind::Cosh: {
            const double b = params.size() > 1 ? params[1] : 1.0;
            return params[0] * cosh(b * x);
        }
        case FactorKind::Log: {
            const double b = params.size() > 1 ? params[1] : 1.0;
            return params[0] * log(b * x);
        }
        case FactorKind::PowerFam: {
            const double m = params[0], n = params[1], l = params[2];
            return pow((1 - m) * n * x + l, 1 / (1 - m));
        }
        case FactorKind::TanForm: {
            const double c = params[0], lam = params[1], c1 = params[2];
            const double s = params.size() > 3 ? params[3] : 1.0;
            const double arg = 0.5 * lam * (v + 2 * c1);
            if (std::abs(std::cos(arg)) < 1e-12)
                throw DomainError("tanform evaluated at a tangent pole");
            const Jet1 t = tan(0.5 * lam * (x + 2 * c1));
            return (s * std::sqrt(c) / lam) * (t / sqrt(1 + t * t));
        }
        case FactorKind::LogTrig: {
            const double sct = std::sqrt(params[0]);
            const Jet1 u = sct * log(x);
            return params[1] * cos(u) + params[2] * sin(u);
        }
        case FactorKind::AsinhForm: {
            const double c = params[0], lam = params[1], s = params[2];
            const Jet1 u = 0.5 * lam * x;
            if (params.size() == 3) return (s * std::sqrt(c) / lam) * asinh(u);
            const Jet1 a = params[3] == 1 ? asinh(u) : asin(u);
            return (1.0 / lam) * exp(s * std::sqrt(c) * a);
        }
        case FactorKind::AtanhExpForm: {
            const double l1 = params[0], l3 = params[1], c = params[2];
            const double c2 = params[3], s = params[4];
            const double n2 = l3 * l1 * l1 + l3 * l3 * l1, n = std::sqrt(n2);
            const Jet1 m = sqrt(4 * c + n2 * (x * x));
            const Jet1 a = atanh(l3 * l1 * x / m);
            return (1.0 / (l3 * l3)) * pow(4 + l3 * l3 * (x * x), l1 / (2 * l3)) *
                   pow(n2 * x + n * m, -n / (l3 * l3)) * exp(s * l3 * l1 * a + c2);
        }
    }
    throw Error("unreachable factor kind");
}

namespace {
std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}
} // namespace

std::string FactorFn::render() const {
    std::string out{factor_kind_name(kind)};
    out += '(';
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += fmt17(params[i]);
    }
    out += ')';
    return out;
}

namespace {

const std::map<std::string, FactorKind>& kind_table() {
    static const std::map<std::string, FactorKind> t = {
        {"const", FactorKind::Const},       {"poly", FactorKind::Poly},
        {"pow", FactorKind::Pow},           {"exp", FactorKind::Exp},
        {"sin", FactorKind::Sin},           {"cos", FactorKind::Cos},
        {"sinh", FactorKind::Sinh},         {"cosh", FactorKind::Cosh},
        {"log", FactorKind::Log},           {"powerfam", FactorKind::PowerFam},
        {"tanform", FactorKind::TanForm},   {"logtrig", FactorKind::LogTrig},
        {"asinhform", FactorKind::AsinhForm},
        {"atanhexpform", FactorKind::AtanhExpForm},
    };
    return t;
}

// named-parameter slots per kind; poly is positional-only
const std::map<std::string, int>* name_slots(FactorKind k) {
    static const std::map<std::string, int> one{{"c", 0}};
    static const std::map<std::string, int> powm{{"p", 0}, {"c", 1}};
    static const std::map<std::string, int> expm{{"c", 0}, {"d", 1}};
    static const std::map<std::string, int> trig{{"a", 0}, {"b", 1}};
    static const std::map<std::string, int> pf{{"m", 0}, {"n", 1}, {"l", 2}};
    static const std::map<std::string, int> tf{{"c", 0}, {"lam", 1}, {"c1", 2}, {"s", 3}};
    static const std::map<std::string, int> lt{{"ct", 0}, {"c1", 1}, {"c2", 2}};
    static const std::map<std::string, int> af{{"c", 0}, {"lam", 1}, {"s", 2}, {"k", 3}};
    static const std::map<std::string, int> aef{
        {"l1", 0}, {"l3", 1}, {"c", 2}, {"c2", 3}, {"s", 4}};
    switch (k) {
        case FactorKind::Const: return &one;
        case FactorKind::Poly: return nullptr;
        case FactorKind::Pow: return &powm;
        case FactorKind::Exp: return &expm;
        case FactorKind::Sin:
        case FactorKind::Cos:
        case FactorKind::Sinh:
        case FactorKind::Cosh:
        case FactorKind::Log: return &trig;
        case FactorKind::PowerFam: return &pf;
        case FactorKind::TanForm: return &tf;
        case FactorKind::LogTrig: return &lt;
        case FactorKind::AsinhForm: return &af;
        case FactorKind::AtanhExpForm: return &aef;
    }
    return nullptr;
}

struct Cursor {
    const std::string& s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool at_end() {
        skip_ws();
        return i >= s.size();
    }
    // 1-based offset of the current position
    std::size_t pos() const { return i + 1; }
};

} // namespace

FactorFn parse_factor(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    const std::size_t id_start = c.i;
    while (c.i < text.size() && (std::isalnum(static_cast<unsigned char>(text[c.i]))))
        ++c.i;
    const std::string ident = text.substr(id_start, c.i - id_start);
    if (ident.empty()) throw ParseError("expected factor kind", c.pos());
    const auto it = kind_table().find(ident);
    if (it == kind_table().end())
        throw ParseError("unknown factor kind '" + ident + "'", id_start + 1);
    const FactorKind kind = it->second;
    const auto* names = name_slots(kind);

    c.skip_ws();
    if (c.i >= text.size() || text[c.i] != '(')
        throw ParseError("expected '('", c.pos());
    const std::size_t open_pos = c.pos();
    ++c.i;

    std::vector<double> params;
    std::vector<bool> set;
    auto assign = [&](int slot, double value, std::size_t at) {
        if (slot >= static_cast<int>(params.size())) {
            params.resize(slot + 1, 0.0);
            set.resize(slot + 1, false);
        }
        if (set[slot]) throw ParseError("parameter given twice", at);
        params[slot] = value;
        set[slot] = true;
    };

    c.skip_ws();
    bool first = true;
    int next_positional = 0;
    while (true) {
        if (c.at_end()) throw ParseError("unclosed argument list", c.pos());
        if (text[c.i] == ')') {
            ++c.i;
            break;
        }
        if (!first) {
            if (text[c.i] != ',') throw ParseError("expected ',' or ')'", c.pos());
            ++c.i;
            c.skip_ws();
            if (c.at_end()) throw ParseError("unclosed argument list", c.pos());
        }
        first = false;
        // optional name '='
        const std::size_t arg_start = c.i;
        std::size_t j = c.i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
            ++j;
        int slot = -1;
        if (j > c.i && j < text.size() && text[j] == '=' &&
            !(std::isdigit(static_cast<unsigned char>(text[c.i])) ||
              text[c.i] == '+' || text[c.i] == '-' || text[c.i] == '.')) {
            const std::string name = text.substr(c.i, j - c.i);
            if (!names)
                throw ParseError("'" + ident + "' takes positional arguments only",
                                 arg_start + 1);
            const auto ns = names->find(name);
            if (ns == names->end())
                throw ParseError("unknown parameter name '" + name + "'", arg_start + 1);
            slot = ns->second;
            c.i = j + 1;
            c.skip_ws();
        }
        // number
        const char* begin = text.c_str() + c.i;
        char* end = nullptr;
        const double value = std::strtod(begin, &end);
        if (end == begin) throw ParseError("expected a number", c.pos());
        c.i += static_cast<std::size_t>(end - begin);
        if (slot < 0) slot = next_positional;
        next_positional = slot + 1;
        assign(slot, value, arg_start + 1);
        c.skip_ws();
    }
    c.skip_ws();
    if (c.i < text.size())
        throw ParseError("trailing characters after factor", c.pos());
    for (std::size_t k = 0; k < set.size(); ++k)
        if (!set[k])
            throw ParseError("missing parameter in slot " + std::to_string(k + 1),
                             open_pos);
    try {
        return FactorFn(kind, std::move(params));
    } catch (const Error& e) {
        throw ParseError(e.what(), open_pos);
    }
}

} // namespace pg
