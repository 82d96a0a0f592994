// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace damu {

enum class NodeClass { balloon, fixed_wing, rotary_wing, ground };

std::string to_string(NodeClass c);

/// Parses "balloon" | "fixed_wing" | "rotary_wing" | "ground".
/// Throws std::invalid_argument on anything else.
NodeClass node_class_from_string(std::string_view s);

} // namespace damu
