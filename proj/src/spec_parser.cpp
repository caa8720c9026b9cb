#include "nker/spec_parser.hpp"

#include "nker/errors.hpp"

#include <cctype>
#include <sstream>

namespace nker {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    GroupSpec parse() {
        GroupSpec spec = product();
        skip_ws();
        if (pos_ < s_.size()) fail("end of input or 'x'");
        return spec;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    [[noreturn]] void fail(const std::string& expected) {
        throw SyntaxError(line_, col_, expected);
    }

    void advance() {
        if (s_[pos_] == '\n') { ++line_; col_ = 1; }
        else ++col_;
        ++pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            advance();
    }
    bool peek_is(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("'") + c + "'");
        advance();
    }
    long integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("integer");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000) fail("smaller integer");
            advance();
        }
        return v;
    }
    std::string word() {
        skip_ws();
        std::string w;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
            { w += s_[pos_]; advance(); }
        return w;
    }

    GroupSpec product() {
        GroupSpec first = item();
        skip_ws();
        if (!(pos_ < s_.size() && s_[pos_] == 'x')) return first;
        GroupSpec prod;
        prod.kind = GroupSpec::Kind::Product;
        prod.children.push_back(std::move(first));
        while (pos_ < s_.size() && s_[pos_] == 'x') {
            advance();
            prod.children.push_back(item());
            skip_ws();
        }
        return prod;
    }

    GroupSpec item() {
        GroupSpec base = atom();
        if (peek_is('^')) {
            advance();
            long r = integer();
            if (r < 1) fail("positive exponent");
            GroupSpec pw;
            pw.kind = GroupSpec::Kind::Power;
            pw.n = r;
            pw.children.push_back(std::move(base));
            return pw;
        }
        return base;
    }

    GroupSpec atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("group atom");
        std::string w = word();
        if (w.empty()) fail("group atom");
        GroupSpec a;
        if (w == "Q" && digits_follow()) {
            long v = integer();
            if (v != 8) fail("'Q8'");
            a.kind = GroupSpec::Kind::Q8;
            return a;
        }
        if (w == "C" && digits_follow()) {
            a.kind = GroupSpec::Kind::Cyclic;
            a.n = integer();
            if (a.n < 1) fail("positive order");
            return a;
        }
        if (w == "Dic") {
            expect('(');
            a.kind = GroupSpec::Kind::Dic;
            a.n = integer();
            expect(')');
            return a;
        }
        if (w == "GDic") {
            expect('(');
            a.kind = GroupSpec::Kind::GDic;
            a.params.push_back(integer());
            while (peek_is(',')) { advance(); a.params.push_back(integer()); }
            if (peek_is(';')) { advance(); a.t_index = integer(); }
            expect(')');
            return a;
        }
        if (w == "PQ") {
            expect('(');
            a.kind = GroupSpec::Kind::PQ;
            a.params.push_back(integer());
            while (peek_is(',')) { advance(); a.params.push_back(integer()); }
            expect(')');
            if (a.params.size() != 4 && a.params.size() != 5)
                fail("PQ(p,q,c,d) or PQ(p,q,c,d,k)");
            return a;
        }
        if (w == "Perm") {
            expect('[');
            a.kind = GroupSpec::Kind::Perm;
            a.perms.push_back(generator());
            while (peek_is(',')) { advance(); a.perms.push_back(generator()); }
            expect(']');
            return a;
        }
        if (w == "S" || w == "A" || w == "D") {
            if (!digits_follow()) fail("group atom");
            long v = integer();
            std::ostringstream nm;
            nm << w << v;
            if (w == "S" && (v == 3 || v == 4)) { a.name = nm.str(); }
            else if (w == "A" && v == 4) { a.name = nm.str(); }
            else if (w == "D" && v >= 3) { a.name = nm.str(); }
            else fail("one of S3, S4, A4, Dn (n >= 3)");
            a.kind = GroupSpec::Kind::Named;
            return a;
        }
        fail("group atom");
    }

    bool digits_follow() {
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    std::vector<std::vector<long>> generator() {
        std::vector<std::vector<long>> cycles;
        if (!peek_is('(')) fail("'('");
        while (peek_is('(')) {
            advance();
            std::vector<long> cyc;
            skip_ws();
            while (!peek_is(')')) cyc.push_back(integer());
            advance(); // ')'
            if (cyc.empty()) fail("cycle point");
            cycles.push_back(std::move(cyc));
        }
        return cycles;
    }
};

void print_to(const GroupSpec& g, std::ostream& os) {
    using K = GroupSpec::Kind;
    switch (g.kind) {
        case K::Cyclic: os << "C" << g.n; break;
        case K::Q8: os << "Q8"; break;
        case K::Dic: os << "Dic(" << g.n << ")"; break;
        case K::GDic:
            os << "GDic(";
            for (size_t i = 0; i < g.params.size(); ++i)
                os << (i ? "," : "") << g.params[i];
            if (g.t_index >= 0) os << ";" << g.t_index;
            os << ")";
            break;
        case K::PQ:
            os << "PQ(";
            for (size_t i = 0; i < g.params.size(); ++i)
                os << (i ? "," : "") << g.params[i];
            os << ")";
            break;
        case K::Perm:
            os << "Perm[";
            for (size_t i = 0; i < g.perms.size(); ++i) {
                if (i) os << ", ";
                for (const auto& cyc : g.perms[i]) {
                    os << "(";
                    for (size_t j = 0; j < cyc.size(); ++j) os << (j ? " " : "") << cyc[j];
                    os << ")";
                }
            }
            os << "]";
            break;
        case K::Named: os << g.name; break;
        case K::Power:
            print_to(g.children[0], os);
            os << "^" << g.n;
            break;
        case K::Product:
            for (size_t i = 0; i < g.children.size(); ++i) {
                if (i) os << " x ";
                print_to(g.children[i], os);
            }
            break;
    }
}

GroupPtr build_named(const std::string& name) {
    if (name == "S3")
        return FiniteGroup::from_permutations({{1, 2, 0}, {1, 0, 2}}, name);
    if (name == "S4")
        return FiniteGroup::from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}, name);
    if (name == "A4")
        return FiniteGroup::from_permutations({{1, 2, 0, 3}, {1, 0, 3, 2}}, name);
    // Dn, dihedral of order 2n
    long n = std::stol(name.substr(1));
    std::vector<int> rot(static_cast<size_t>(n), 0);
    std::vector<int> ref(static_cast<size_t>(n), 0);
    for (long i = 0; i < n; ++i) {
        rot[size_t(i)] = int((i + 1) % n);
        ref[size_t(i)] = int((n - i) % n);
    }
    return FiniteGroup::from_permutations({rot, ref}, name);
}

GroupPtr build_atom(const GroupSpec& g) {
    using K = GroupSpec::Kind;
    switch (g.kind) {
        case K::Cyclic: return FiniteGroup::cyclic(int(g.n));
        case K::Q8: return FiniteGroup::dicyclic(2);
        case K::Dic: return FiniteGroup::dicyclic(int(g.n));
        case K::GDic: {
            std::vector<int> inv(g.params.begin(), g.params.end());
            return FiniteGroup::generalized_dicyclic(inv, g.t_index);
        }
        case K::PQ: {
            PQParams pp;
            pp.p = g.params[0];
            pp.q = g.params[1];
            pp.c = g.params[2];
            pp.d = g.params[3];
            if (g.params.size() == 5) pp.k = g.params[4];
            return pq_family(pp).group;
        }
        case K::Perm: {
            long deg = 0;
            for (const auto& gen : g.perms)
                for (const auto& cyc : gen)
                    for (long pt : cyc) deg = std::max(deg, pt + 1);
            std::vector<std::vector<int>> images;
            for (const auto& gen : g.perms) {
                std::vector<int> img(static_cast<size_t>(deg), 0);
                for (long i = 0; i < deg; ++i) img[size_t(i)] = int(i);
                for (const auto& cyc : gen)
                    for (size_t j = 0; j < cyc.size(); ++j) {
                        long from = cyc[j], to = cyc[(j + 1) % cyc.size()];
                        if (from >= deg || img[size_t(from)] != from)
                            throw InvalidParams("cycles must be disjoint per generator");
                        img[size_t(from)] = int(to);
                    }
                images.push_back(std::move(img));
            }
            return FiniteGroup::from_permutations(images, print_spec(g));
        }
        case K::Named: return build_named(g.name);
        default: break;
    }
    throw InvalidParams("not an atom");
}

} // namespace

GroupSpec parse_spec(const std::string& text) { return Parser(text).parse(); }

std::string print_spec(const GroupSpec& spec) {
    std::ostringstream os;
    print_to(spec, os);
    return os.str();
}

GroupPtr build_group(const GroupSpec& spec) {
    using K = GroupSpec::Kind;
    std::vector<const GroupSpec*> flat;
    std::vector<long> reps;
    if (spec.kind == K::Product) {
        for (const GroupSpec& ch : spec.children) {
            if (ch.kind == K::Power) { flat.push_back(&ch.children[0]); reps.push_back(ch.n); }
            else { flat.push_back(&ch); reps.push_back(1); }
        }
    } else if (spec.kind == K::Power) {
        flat.push_back(&spec.children[0]);
        reps.push_back(spec.n);
    } else {
        flat.push_back(&spec);
        reps.push_back(1);
    }

    GroupPtr acc;
    long order = 1;
    for (size_t i = 0; i < flat.size(); ++i) {
        GroupPtr factor = build_atom(*flat[i]);
        for (long r = 0; r < reps[i]; ++r) {
            order *= factor->order();
            if (order > 512)
                throw OrderBound("order " + std::to_string(order) + " exceeds 512");
            acc = acc ? FiniteGroup::direct_product(acc, factor) : factor;
        }
    }
    return acc;
}

} // namespace nker
