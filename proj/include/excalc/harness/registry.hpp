#pragma once

/**
 * @file registry.hpp
 * @brief The identity registry and the equation coverage table.
 */

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "excalc/harness/cases_algebraic.hpp"
#include "excalc/harness/cases_covariant.hpp"
#include "excalc/harness/cases_gauge.hpp"
#include "excalc/harness/cases_levi_civita.hpp"
#include "excalc/harness/cases_ordinary.hpp"

namespace excalc::harness {

template <std::size_t N>
const std::vector<IdentityCase<N>>& registry() {
  static const std::vector<IdentityCase<N>> cases = [] {
    std::vector<IdentityCase<N>> v;
    add_algebraic_cases<N>(v);
    add_ordinary_cases<N>(v);
    add_levi_civita_cases<N>(v);
    add_lagrangian_cases<N>(v);
    add_gauge_cases<N>(v);
    add_covariant_cases<N>(v);
    return v;
  }();
  return cases;
}

template <std::size_t N>
const IdentityCase<N>& find_case(const std::string& id) {
  for (const auto& c : registry<N>())
    if (c.id == id) return c;
  throw std::invalid_argument("unknown identity '" + id + "'");
}

/// One row per labelled equation: the case that checks it, or why none does.
struct CoverageEntry {
  std::string label;
  std::string case_id;  ///< empty when covered by a note only
  std::string note;
};

inline const std::vector<CoverageEntry>& coverage() {
  static const std::vector<CoverageEntry> table{
      {"OHD.1", "", "definition of the fiducial pseudoscalar b_^; checked through OHD.6"},
      {"OHD.2", "OHD.6", "definition of tau from a frame"},
      {"OHD.2a", "OHD.2a", ""},
      {"OHD.2b", "OHD.2b", ""},
      {"OHD.3", "OHD.6a", "a . d_o b_^ = 0 is the constant-frame instance"},
      {"OHD.4", "OHD.6b", "b_^ products are the constant-frame instance"},
      {"OHD.5a", "", "definition of the frame pseudoscalars e_^ and e^^; used by OHD.6 and OHD.7"},
      {"OHD.5b", "", "definition of the frame pseudoscalars e_^ and e^^; used by OHD.6 and OHD.7"},
      {"OHD.6", "OHD.6", ""},
      {"OHD.6a", "OHD.6a", ""},
      {"OHD.6b", "OHD.6b", ""},
      {"OHD.7", "OHD.7", ""},
      {"OHD.7a", "OHD.7a", ""},
      {"OHD.7b", "OHD.7b", ""},
      {"OHD.8", "OHD.8a", "definition of star; inverse pair checked"},
      {"OHD.8a", "OHD.8a", ""},
      {"OHD.8b", "OHD.8b", ""},
      {"OHD.8c", "OHD.8c", ""},
      {"OHD.9", "OHD.9", ""},
      {"OHD.9a", "OHD.9a", ""},
      {"DI.1", "DI.1", ""},
      {"DI.2", "DI.2", ""},
      {"HDI.1", "HDI.1", ""},
      {"HDI.2", "HDI.2", ""},
      {"OHO.1", "OHO.1a", "definition of delta; evaluated by the definitional path"},
      {"OHO.1a", "OHO.1a", ""},
      {"OHO.2", "OHO.2a", "definition of delta_g; evaluated by the definitional path"},
      {"OHO.2a", "OHO.2a", ""},
      {"LGS.1", "LGS.symmetry", "definition of lambda; symmetry and LGS.1b checked"},
      {"LGS.1a", "LGS.1b", "definition of omega0; its defining property is LGS.1b"},
      {"LGS.1b", "LGS.1b", ""},
      {"LGS.2a", "LGS.compat", "definition of D^+"},
      {"LGS.2b", "LGS.compat", "definition of D^-"},
      {"LGS.3a", "LGS.3a", ""},
      {"LGS.3b", "LGS.3b", ""},
      {"LGS.4a", "LGS.4a", ""},
      {"LGS.4b", "LGS.4b", ""},
      {"LCD.1", "LCD.1", ""},
      {"LCD.1a", "LCD.1a", ""},
      {"LCD.2a", "LCD.3", "definition of D^- _|_{g^-1}"},
      {"LCD.2b", "LCD.3", "definition of D^- ^"},
      {"LCD.2c", "LCD.3", "definition of D^-_{g^-1}"},
      {"LCD.3", "LCD.3", ""},
      {"LCD.4a", "LCD.4a", ""},
      {"LCD.4b", "LCD.4b", ""},
      {"LCD.4b1", "LCD.4b1", ""},
      {"LCD.4b2", "LCD.4b2", ""},
      {"LCD.5", "LCD.5", ""},
      {"LCD.6a", "LCD.6a", ""},
      {"LCD.6b", "LCD.6b", ""},
      {"LCD.6c", "LCD.6c", ""},
      {"GD.1a", "GD.3", "definition of Dj+; compared with the Omega0 form"},
      {"GD.1b", "GD.1", "definition of Dj-; compared with Dj+ through eta"},
      {"GD.2", "GD.2", ""},
      {"GD.3", "GD.3", ""},
      {"GD.3a", "GD.3", "the bivector product form of Omega0(a) acting on X"},
      {"GD.4", "GD.4", ""},
      {"GD.5a", "GD.8a", "definition of the gauge divergence"},
      {"GD.5b", "GD.8b", "definition of the gauge curl"},
      {"GD.5c", "GD.6", "definition of the gauge gradient"},
      {"GD.6", "GD.6", ""},
      {"GD.7a", "GD.7a", ""},
      {"GD.7b", "GD.7b", ""},
      {"GD.7c", "GD.7c", ""},
      {"GD.8a", "GD.8a", ""},
      {"GD.8b", "GD.8b", ""},
      {"CHC.1", "CHC.1", ""},
      {"CHC.2", "CHC.2", ""},
      {"CHC.3a", "CHC.3d", "definition of D^- _|_{g^-1} for (U, gamma, g)"},
      {"CHC.3b", "CHC.3d", "definition of D^- ^ for (U, gamma, g)"},
      {"CHC.3c", "CHC.3d", "definition of D^-_{g^-1} for (U, gamma, g)"},
      {"CHC.3d", "CHC.3d", ""},
      {"CHC.4", "CHC.4", ""},
      {"CHC.5", "CHC.5", ""},
      {"CHC.6", "CHC.6a", "definition of Delta_g; evaluated by the definitional path"},
      {"CHC.6a", "CHC.6a", ""},
  };
  return table;
}

/// Identity ids that must each have their own registered case.
inline const std::vector<std::string>& required_ids() {
  static const std::vector<std::string> ids{
      "DI.1",   "DI.2",   "HDI.1",  "HDI.2",   "OHD.2a", "OHD.2b", "OHD.6",   "OHD.6a", "OHD.6b", "OHD.7a",
      "OHD.7b", "OHD.8b", "OHD.8c", "OHO.1a",  "OHO.2a", "LGS.1b", "LGS.3a",  "LGS.3b", "LGS.4a", "LGS.4b",
      "LCD.1a", "LCD.3",  "LCD.4a", "LCD.4b",  "LCD.4b1", "LCD.4b2", "LCD.5", "LCD.6a", "LCD.6b", "LCD.6c",
      "GD.2",   "GD.3",   "GD.6",   "GD.7a",   "GD.7b",  "GD.7c",  "GD.8a",   "GD.8b",  "CHC.1",  "CHC.2",
      "CHC.3d", "CHC.4",  "CHC.5",  "CHC.6a"};
  return ids;
}

/**
 * Expands a selection list into registered ids. Items may be ids, suite names
 * or "all"; order of the result follows the registry.
 */
template <std::size_t N>
std::vector<std::string> select_identities(const std::vector<std::string>& items) {
  std::set<std::string> wanted;
  for (const auto& item : items) {
    if (item == "all") {
      for (const auto& c : registry<N>()) wanted.insert(c.id);
      continue;
    }
    bool matched = false;
    for (const auto& c : registry<N>())
      if (c.id == item || suite_name(c.suite) == item) {
        wanted.insert(c.id);
        matched = true;
      }
    if (!matched) throw std::invalid_argument("unknown identity or suite '" + item + "'");
  }
  std::vector<std::string> out;
  for (const auto& c : registry<N>())
    if (wanted.count(c.id)) out.push_back(c.id);
  return out;
}

}  // namespace excalc::harness
