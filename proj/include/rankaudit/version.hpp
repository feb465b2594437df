#ifndef RANKAUDIT_VERSION_HPP
#define RANKAUDIT_VERSION_HPP

namespace rankaudit {

inline constexpr const char* kToolName = "rankaudit";
inline constexpr const char* kToolVersion = "0.1.0";

} // namespace rankaudit

#endif // RANKAUDIT_VERSION_HPP
