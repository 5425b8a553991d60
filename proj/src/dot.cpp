#include "omegasub/dot.hpp"

#include "omegasub/errors.hpp"

#include <fstream>
#include <sstream>

namespace omegasub {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_dot(const OmegaAutomaton& automaton) {
  std::ostringstream out;
  out << "digraph automaton {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (std::size_t q = 0; q < automaton.state_count(); ++q) {
    out << "  s" << q << " [label=" << quoted(automaton.state_name(q));
    if (automaton.initial().test(q)) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t q = 0; q < automaton.state_count(); ++q)
    for (Letter a = 0; a < automaton.alphabet().size(); ++a) {
      const StateSet& row = automaton.relation(a).row(q);
      for (auto t = row.find_first(); t != StateSet::npos; t = row.find_next(t))
        out << "  s" << q << " -> s" << t << " [label=" << quoted(automaton.alphabet().symbol(a)) << "];\n";
    }
  out << "}\n";
  return out.str();
}

std::string to_dot(const MetaAutomaton& meta) {
  std::ostringstream out;
  out << "digraph meta {\n";
  out << "  node [shape=box];\n";
  for (std::size_t v = 0; v < meta.vertex_count(); ++v) {
    out << "  v" << v << " [label=\"" << v << '"';
    if (meta.initial && *meta.initial == v) out << ", peripheries=2";
    if (meta.empty[v]) out << ", style=dashed";
    out << "];\n";
  }
  for (std::size_t v = 0; v < meta.vertex_count(); ++v)
    for (std::size_t s = 0; s < meta.edges[v].size(); ++s)
      if (meta.edges[v][s] != kNoVertex)
        out << "  v" << v << " -> v" << meta.edges[v][s] << " [label=" << quoted(meta.substitutions[s].name)
            << "];\n";
  out << "}\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + path + "'");
  file << contents;
  if (!file) throw InputError("failed writing '" + path + "'");
}

}  // namespace omegasub
