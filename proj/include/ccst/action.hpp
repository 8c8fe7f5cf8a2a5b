#pragma once

#include <stdexcept>
#include <string>

namespace ccst {

// Action labels of CCS_t: names, conames, the hidden action tau, and the
// time-out action t.  Names and conames are visible; tau and t are not.
enum class ActKind { Tau, Timeout, Name, Coname };

struct ActionLabel {
  ActKind kind = ActKind::Tau;
  std::string name;  // empty for tau/timeout

  static ActionLabel tau() { return {ActKind::Tau, ""}; }
  static ActionLabel timeout() { return {ActKind::Timeout, ""}; }
  static ActionLabel mk_name(std::string n) { return {ActKind::Name, std::move(n)}; }
  static ActionLabel mk_coname(std::string n) { return {ActKind::Coname, std::move(n)}; }

  bool is_tau() const { return kind == ActKind::Tau; }
  bool is_timeout() const { return kind == ActKind::Timeout; }
  bool is_visible() const { return kind == ActKind::Name || kind == ActKind::Coname; }

  ActionLabel complement() const {
    if (kind == ActKind::Name) return mk_coname(name);
    if (kind == ActKind::Coname) return mk_name(name);
    throw std::invalid_argument("complement undefined on " + str());
  }

  std::string str() const {
    switch (kind) {
      case ActKind::Tau: return "tau";
      case ActKind::Timeout: return "t";
      case ActKind::Name: return name;
      case ActKind::Coname: return "'" + name;
    }
    return "?";
  }

  friend bool operator==(const ActionLabel& a, const ActionLabel& b) {
    return a.kind == b.kind && a.name == b.name;
  }
  friend bool operator!=(const ActionLabel& a, const ActionLabel& b) { return !(a == b); }
  // Fixed total order on labels: tau < t < names < conames, then by name.
  friend bool operator<(const ActionLabel& a, const ActionLabel& b) {
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.name < b.name;
  }
};

}  // namespace ccst
