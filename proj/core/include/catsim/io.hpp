#ifndef CATSIM_IO_HPP
#define CATSIM_IO_HPP

#include <string>
#include <variant>

#include "catsim/mode_ops.hpp"

namespace catsim::io {

/// Round-trip double formatting (17 significant digits, %g style). All
/// file writers go through this so identical inputs yield identical bytes.
std::string format_double(double value);

/// catsim-state-v1: {"format":"catsim-state-v1","modes":1,"cutoff":N,
/// "amplitudes":[[re,im],...]} with amplitudes listed from n = 0 upward.
std::string state_to_json(const PureState& s);

/// Two-mode variant with "cutoff_a"/"cutoff_b" and the amplitude grid
/// row-major in n_A.
std::string state_to_json(const TwoModePureState& s);

using AnyPureState = std::variant<PureState, TwoModePureState>;

/// Parses a catsim-state-v1 document. An object holding the state under a
/// "state" key (as the protocol reports do) is accepted too.
AnyPureState state_from_json(const std::string& text);

AnyPureState load_state_file(const std::string& path);

void write_text_file(const std::string& path, const std::string& content);

std::string read_text_file(const std::string& path);

}  // namespace catsim::io

#endif
