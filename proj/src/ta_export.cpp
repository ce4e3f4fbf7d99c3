#include "tpn/ta_export.hpp"

#include <sstream>

namespace tpn {

namespace {

const char* rel_text(ClockRel rel) {
    switch (rel) {
    case ClockRel::Le: return " <= ";
    case ClockRel::Lt: return " < ";
    case ClockRel::Ge: return " >= ";
    case ClockRel::Gt: return " > ";
    }
    return " ? ";
}

std::string conjunction(const TimedAutomaton& ta, const std::vector<ClockAtom>& atoms,
                        const std::string& sep) {
    std::string out;
    for (const auto& a : atoms) {
        if (a.is_vacuous())
            continue;
        out += (out.empty() ? "" : sep) + render_atom(ta, a);
    }
    return out;
}

std::string assignments(const TimedAutomaton& ta, const std::vector<Assignment>& as) {
    std::string out;
    for (const auto& a : as)
        out += (out.empty() ? "" : ", ") + ta.clocks[a.target] + " := " +
               (a.source ? ta.clocks[*a.source] : "0");
    return out;
}

}  // namespace

std::string render_atom(const TimedAutomaton& ta, const ClockAtom& atom) {
    return ta.clocks[atom.clock] + rel_text(atom.rel) + std::to_string(atom.constant);
}

std::string export_xta(const TimedAutomaton& ta) {
    std::ostringstream out;
    out << "// generated by tpn-reach\n";
    if (!ta.clocks.empty()) {
        out << "clock ";
        for (std::size_t i = 0; i < ta.clocks.size(); ++i)
            out << (i ? ", " : "") << ta.clocks[i];
        out << ";\n";
    }
    out << "process P() {\n";
    out << "  state ";
    for (std::size_t i = 0; i < ta.locations.size(); ++i) {
        const auto& loc = ta.locations[i];
        out << (i ? ", " : "") << loc.name;
        const std::string inv = conjunction(ta, loc.invariant, " && ");
        if (!inv.empty())
            out << " { " << inv << " }";
    }
    out << ";\n";
    out << "  init " << ta.locations[ta.initial].name << ";\n";
    if (!ta.edges.empty()) {
        out << "  trans\n";
        for (std::size_t i = 0; i < ta.edges.size(); ++i) {
            const auto& e = ta.edges[i];
            out << "    " << ta.locations[e.source].name << " -> " << ta.locations[e.target].name
                << " {";
            const std::string guard = conjunction(ta, e.guard, " && ");
            if (!guard.empty())
                out << " guard " << guard << ";";
            const std::string assign = assignments(ta, e.assignments);
            if (!assign.empty())
                out << " assign " << assign << ";";
            out << " }" << (i + 1 < ta.edges.size() ? ",\n" : ";\n");
        }
    }
    out << "}\n";
    out << "system P;\n";
    return out.str();
}

std::string export_kronos(const TimedAutomaton& ta) {
    if (ta.has_copies())
        throw UnsupportedFeature("the KRONOS format has no clock copies (x := y)");
    std::ostringstream out;
    out << "#states " << ta.locations.size() << "\n";
    out << "#trans " << ta.edges.size() << "\n";
    out << "#clocks " << ta.clocks.size() << "\n";
    for (std::size_t i = 0; i < ta.clocks.size(); ++i)
        out << (i ? " " : "") << ta.clocks[i];
    out << "\n";
    // KRONOS takes state 0 as initial, so the initial location comes first
    std::vector<std::size_t> order{ta.initial};
    for (std::size_t l = 0; l < ta.locations.size(); ++l)
        if (l != ta.initial)
            order.push_back(l);
    std::vector<std::size_t> number(ta.locations.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        number[order[i]] = i;

    for (std::size_t l : order) {
        const auto& loc = ta.locations[l];
        const std::string inv = conjunction(ta, loc.invariant, " and ");
        out << "\nstate: " << number[l] << "\n";
        out << "prop: " << loc.name << "\n";
        out << "invar: " << (inv.empty() ? "true" : inv) << "\n";
        out << "trans:\n";
        for (const auto& e : ta.edges) {
            if (e.source != l)
                continue;
            const std::string guard = conjunction(ta, e.guard, " and ");
            out << (guard.empty() ? "true" : guard) << " => " << ta.actions[e.label] << "; reset{";
            for (std::size_t i = 0; i < e.assignments.size(); ++i)
                out << " " << ta.clocks[e.assignments[i].target];
            out << (e.assignments.empty() ? "}" : " }") << "; goto " << number[e.target] << "\n";
        }
    }
    return out.str();
}

std::string export_dot(const TimedAutomaton& ta) {
    std::ostringstream out;
    out << "digraph timed_automaton {\n";
    for (std::size_t l = 0; l < ta.locations.size(); ++l) {
        const auto& loc = ta.locations[l];
        out << "  " << loc.name << " [label=\"" << loc.name << " " << loc.marking.to_string();
        const std::string inv = conjunction(ta, loc.invariant, " && ");
        if (!inv.empty())
            out << "\\n" << inv;
        out << "\"" << (l == ta.initial ? ", peripheries=2" : "") << "];\n";
    }
    for (const auto& e : ta.edges) {
        out << "  " << ta.locations[e.source].name << " -> " << ta.locations[e.target].name
            << " [label=\"" << ta.actions[e.label];
        const std::string guard = conjunction(ta, e.guard, " && ");
        if (!guard.empty())
            out << "\\n" << guard;
        const std::string assign = assignments(ta, e.assignments);
        if (!assign.empty())
            out << "\\n" << assign;
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string export_ta(const TimedAutomaton& ta, TaFormat format) {
    switch (format) {
    case TaFormat::Xta: return export_xta(ta);
    case TaFormat::Kronos: return export_kronos(ta);
    case TaFormat::Dot: return export_dot(ta);
    }
    return {};
}

}  // namespace tpn
