#pragma once

#include <string>
#include <vector>

#include "discop/curves.hpp"

namespace discop::specimens {

/// (t cos(pi t), t sin(pi t)) on [0, 1]; open.
Curve spiral();
/// (cos 2 pi t, sin 2 pi t, t) on [0, 2]; open.
Curve helix();
/// (cos 4 pi t + 2 cos 2 pi t, sin 2 pi t) on [0, 1]; closed.
Curve closed_figure();
/// The constant curve (3, -1) on [0, 1]; closed.
Curve constant();

/// Throws DomainError for unknown names.
Curve by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace discop::specimens
