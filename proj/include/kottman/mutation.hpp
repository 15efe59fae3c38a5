#pragma once

#include <string>

namespace kottman::mutation {

/// Fault injection for the self-test's mutation check. Nothing is active by default.
enum class Fault { none, is_free_off_by_one };

void inject(Fault f) noexcept;
Fault active() noexcept;
/// Throws PreconditionError for unknown names.
Fault parse_fault(const std::string& name);

}  // namespace kottman::mutation
