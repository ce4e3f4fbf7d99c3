#include "tpn/net_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace tpn {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0])))
        return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
            return false;
    return true;
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos)
            raw = raw.substr(0, hash);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            std::size_t j = i;
            while (j < raw.size() && !std::isspace(static_cast<unsigned char>(raw[j])))
                ++j;
            if (j > i)
                line.tokens.push_back({raw.substr(i, j - i), i + 1});
            i = j;
        }
        if (!line.tokens.empty())
            lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

class LineReader {
public:
    explicit LineReader(const Line& line) : line_(line) {}

    bool done() const { return pos_ >= line_.tokens.size(); }

    const Token& next(const char* expected) {
        if (done()) {
            std::size_t col = 1;
            if (!line_.tokens.empty()) {
                const auto& last = line_.tokens.back();
                col = last.column + last.text.size();
            }
            throw ParseError(line_.number, col, std::string("expected ") + expected);
        }
        return line_.tokens[pos_++];
    }

    void keyword(const char* kw) {
        const Token& tok = next(kw);
        if (tok.text != kw)
            fail(tok, std::string("expected '") + kw + "', found '" + std::string(tok.text) + "'");
    }

    std::string identifier(const char* what) {
        const Token& tok = next(what);
        if (!is_identifier(tok.text))
            fail(tok, "invalid " + std::string(what) + " '" + std::string(tok.text) + "'");
        return std::string(tok.text);
    }

    std::int64_t natural(const Token& tok) const { return parse_nat(tok, tok.text); }

    std::int64_t natural(const char* what) { return natural(next(what)); }

    Rational rational(const Token& tok) const {
        auto slash = tok.text.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_nat(tok, tok.text));
        std::int64_t num = parse_nat(tok, tok.text.substr(0, slash));
        std::int64_t den = parse_nat(tok, tok.text.substr(slash + 1));
        if (den == 0)
            fail(tok, "zero denominator");
        return Rational(num, den);
    }

    void end() {
        if (!done())
            fail(line_.tokens[pos_], "unexpected '" + std::string(line_.tokens[pos_].text) + "'");
    }

    [[noreturn]] void fail(const Token& tok, const std::string& msg) const {
        throw ParseError(line_.number, tok.column, msg);
    }

    std::size_t number() const { return line_.number; }

private:
    std::int64_t parse_nat(const Token& tok, std::string_view s) const {
        std::int64_t v = 0;
        if (s.empty())
            fail(tok, "expected a number");
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc::result_out_of_range)
            fail(tok, "number out of range");
        if (ec != std::errc() || ptr != s.data() + s.size() || v < 0)
            fail(tok, "invalid number '" + std::string(tok.text) + "'");
        return v;
    }

    const Line& line_;
    std::size_t pos_ = 0;
};

struct PendingArc {
    bool is_pre;
    std::string place;
    std::string transition;
    Tokens weight;
    std::size_t line;
};

Tokens to_tokens(LineReader& r, const Token& tok, std::int64_t v) {
    if (v > static_cast<std::int64_t>(std::numeric_limits<Tokens>::max()))
        r.fail(tok, "token count out of range");
    return static_cast<Tokens>(v);
}

std::string at_line(std::size_t line, const std::string& msg) {
    return "line " + std::to_string(line) + ": " + msg;
}

}  // namespace

TimePetriNet parse_net(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(1, 1, "missing 'net' header");

    std::string net_name;
    {
        LineReader r(lines.front());
        r.keyword("net");
        net_name = r.identifier("net name");
        r.end();
    }

    std::vector<std::string> places;
    std::vector<Tokens> initial;
    std::map<std::string, std::size_t> place_line;
    std::vector<Transition> transitions;
    std::map<std::string, std::size_t> transition_line;
    std::vector<PendingArc> arcs;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        LineReader r(lines[i]);
        const Token& head = r.next("declaration");
        if (head.text == "place") {
            std::string name = r.identifier("place name");
            Tokens init = 0;
            if (!r.done()) {
                r.keyword("init");
                const Token& tok = r.next("initial token count");
                init = to_tokens(r, tok, r.natural(tok));
            }
            r.end();
            if (auto [it, fresh] = place_line.emplace(name, r.number()); !fresh)
                throw ValidationError(at_line(r.number(), "duplicate place '" + name +
                                                              "' (first declared on line " +
                                                              std::to_string(it->second) + ")"));
            places.push_back(name);
            initial.push_back(init);
        } else if (head.text == "transition") {
            Transition t;
            t.name = r.identifier("transition name");
            r.keyword("eft");
            t.eft = r.rational(r.next("earliest firing time"));
            r.keyword("lft");
            const Token& lft = r.next("latest firing time");
            if (lft.text != "inf")
                t.lft = r.rational(lft);
            r.end();
            if (auto [it, fresh] = transition_line.emplace(t.name, r.number()); !fresh)
                throw ValidationError(at_line(r.number(), "duplicate transition '" + t.name +
                                                              "' (first declared on line " +
                                                              std::to_string(it->second) + ")"));
            if (t.lft && *t.lft < t.eft)
                throw ValidationError(at_line(r.number(), "transition '" + t.name +
                                                              "' has eft > lft"));
            transitions.push_back(std::move(t));
        } else if (head.text == "arc") {
            const Token& dir = r.next("'pre' or 'post'");
            PendingArc arc{};
            arc.line = r.number();
            if (dir.text == "pre") {
                arc.is_pre = true;
                arc.place = r.identifier("place name");
                arc.transition = r.identifier("transition name");
            } else if (dir.text == "post") {
                arc.is_pre = false;
                arc.transition = r.identifier("transition name");
                arc.place = r.identifier("place name");
            } else {
                r.fail(dir, "expected 'pre' or 'post'");
            }
            arc.weight = 1;
            if (!r.done()) {
                const Token& tok = r.next("arc weight");
                arc.weight = to_tokens(r, tok, r.natural(tok));
                if (arc.weight == 0)
                    r.fail(tok, "arc weight must be positive");
            }
            r.end();
            arcs.push_back(std::move(arc));
        } else if (head.text == "net") {
            r.fail(head, "duplicate 'net' header");
        } else {
            r.fail(head, "unknown declaration '" + std::string(head.text) + "'");
        }
    }

    for (auto& t : transitions) {
        t.pre.assign(places.size(), 0);
        t.post.assign(places.size(), 0);
    }
    auto place_index = [&](const PendingArc& a) {
        for (PlaceId p = 0; p < places.size(); ++p)
            if (places[p] == a.place)
                return p;
        throw ValidationError(at_line(a.line, "unknown place '" + a.place + "'"));
    };
    auto transition_index = [&](const PendingArc& a) {
        for (TransitionId t = 0; t < transitions.size(); ++t)
            if (transitions[t].name == a.transition)
                return t;
        throw ValidationError(at_line(a.line, "unknown transition '" + a.transition + "'"));
    };
    for (const auto& a : arcs) {
        PlaceId p = place_index(a);
        TransitionId t = transition_index(a);
        Tokens& slot = a.is_pre ? transitions[t].pre[p] : transitions[t].post[p];
        if (slot != 0)
            throw ValidationError(at_line(a.line, "duplicate arc between '" + a.place +
                                                      "' and '" + a.transition + "'"));
        slot = a.weight;
    }

    return TimePetriNet(net_name, std::move(places), std::move(transitions),
                        Marking(std::move(initial)));
}

TimePetriNet parse_net(std::istream& in) {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_net(buf.str());
}

TimePetriNet load_net(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_net(in);
}

std::string serialize_net(const TimePetriNet& net) {
    std::ostringstream out;
    out << "net " << net.name() << '\n';
    const auto& m0 = net.initial_marking();
    for (PlaceId p = 0; p < net.place_count(); ++p) {
        out << "place " << net.places()[p];
        if (m0[p] != 0)
            out << " init " << m0[p];
        out << '\n';
    }
    for (const auto& t : net.transitions()) {
        out << "transition " << t.name << " eft " << format_rational(t.eft) << " lft "
            << (t.lft ? format_rational(*t.lft) : std::string("inf")) << '\n';
    }
    auto weight = [](Tokens w) { return w == 1 ? std::string() : " " + std::to_string(w); };
    for (const auto& t : net.transitions()) {
        for (PlaceId p = 0; p < net.place_count(); ++p)
            if (t.pre[p] != 0)
                out << "arc pre " << net.places()[p] << ' ' << t.name << weight(t.pre[p]) << '\n';
        for (PlaceId p = 0; p < net.place_count(); ++p)
            if (t.post[p] != 0)
                out << "arc post " << t.name << ' ' << net.places()[p] << weight(t.post[p]) << '\n';
    }
    return out.str();
}

}  // namespace tpn
