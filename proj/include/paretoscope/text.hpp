#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "paretoscope/polity.hpp"
#include "paretoscope/transforms.hpp"
#include "paretoscope/welfare.hpp"

namespace paretoscope::text {

// Value grammar shared by scenario files, the --state flag and reports.
//
//   rational    := digits | digits '.' digits | '.' digits | digits '/' digits
//   allocation  := '(' bundle { ',' bundle } ')'
//   bundle      := rational | '[' rational { ',' rational } ']'
//   move        := allocation '->' allocation
//   transform   := 'own' | 'weighted_own' [ '(' weights ')' ] | 'relative_mean'
//                | 'relative_mean(' weights ')' | 'relative_nbhd(' ids [ ';' weights ] ')'
//   swf         := 'sum' | 'maximin' | 'weighted_sum(' weights ')'
//   levels      := level-list { ';' level-list }
//   level-list  := rational { ',' rational } | integer '..' integer
//
// Agent ids in text are 1-based. Parse failures raise ParseError with a
// column relative to the start of the value (line 0).

Allocation parse_allocation(std::string_view s);
Move parse_move(std::string_view s);
std::vector<Move> parse_moves(std::string_view s);
std::vector<Allocation> parse_allocation_list(std::string_view s);
TransformSpec parse_transform(std::string_view s);
Combiner parse_combiner(std::string_view s);
std::vector<std::vector<Quantity>> parse_levels(std::string_view s);
std::vector<Quantity> parse_quantity_list(std::string_view s);

std::string format_bundle(const Bundle& b);
std::string format_allocation(const Allocation& a);
std::string format_move(const Move& m);
std::string format_transform(const TransformSpec& t);
std::string format_info(const PreferenceInfo& info);

}  // namespace paretoscope::text
