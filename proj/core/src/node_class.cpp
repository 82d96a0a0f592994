// SPDX-License-Identifier: Apache-2.0

#include "damu/node_class.hpp"

#include <stdexcept>

namespace damu {

std::string to_string(NodeClass c)
{
    switch (c) {
    case NodeClass::balloon: return "balloon";
    case NodeClass::fixed_wing: return "fixed_wing";
    case NodeClass::rotary_wing: return "rotary_wing";
    case NodeClass::ground: return "ground";
    }
    throw std::invalid_argument("to_string: bad NodeClass");
}

NodeClass node_class_from_string(std::string_view s)
{
    if (s == "balloon") return NodeClass::balloon;
    if (s == "fixed_wing") return NodeClass::fixed_wing;
    if (s == "rotary_wing") return NodeClass::rotary_wing;
    if (s == "ground") return NodeClass::ground;
    throw std::invalid_argument("unknown node class '" + std::string(s) + "'");
}

} // namespace damu
