#pragma once

#include <string>
#include <string_view>

#include "dvbp/model.hpp"

namespace dvbp {

// Instance CSV:
//
//   # key=value            optional metadata lines ("capacity" is special:
//   # capacity=c1,...,cd   it sets the bin capacity, default all ones)
//   id,arrival,departure,s1,...,sd
//   1,0,1,1/2,3/10
//
// Row order is the instance order. Scalars are written canonically.
std::string write_instance_csv(const Instance& instance);
Instance parse_instance_csv(std::string_view text);

Instance read_instance_file(const std::string& path);
void write_instance_file(const Instance& instance, const std::string& path);

// Helpers shared by the other text formats.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace dvbp
