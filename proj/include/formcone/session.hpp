#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "formcone/lzero.hpp"
#include "formcone/parse.hpp"

namespace formcone {

struct SessionParams {
  unsigned n_max = 10;
  unsigned l_max = 12;
  unsigned window = 2;
  unsigned degree_cap = 8;
  unsigned probe_cap = 12;
  unsigned search_random = 40;
  unsigned search_extra_degree = 2;
  std::uint64_t max_reductions = 1'000'000;

  friend bool operator==(const SessionParams&, const SessionParams&) = default;
};

struct SessionSpec {
  RingPtr ring;
  std::vector<Polynomial> base;
  // Generators of I_M beyond the base; empty means M = A.
  std::vector<Polynomial> module;
  std::vector<Polynomial> q;
  std::vector<FiltrationContext::ClaimedElement> system;
  SessionParams params;

  friend bool operator==(const SessionSpec& a, const SessionSpec& b);
};

// Keys accepted by `set` lines and --set flags.
const std::vector<std::string>& session_keys();
// Throws InputError for an unknown key or a malformed value.
void set_parameter(SessionParams& params, std::string_view key, std::string_view value);

// Parses the line-oriented session format. With `validate`, also builds the
// filtration context so claimed degrees are checked.
SessionSpec parse_session(std::string_view text, bool validate = true);
std::string print_session(const SessionSpec& spec);

FiltrationContext build_context(const SessionSpec& spec);
LZeroParams lzero_params(const SessionParams& p);

}  // namespace formcone
