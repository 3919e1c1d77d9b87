#ifndef QWEINGARTEN_VERSION_HPP
#define QWEINGARTEN_VERSION_HPP

namespace qweingarten {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kOutputSchemaVersion = 1;

} // namespace qweingarten

#endif
