#pragma once

namespace factorlab {

inline constexpr int kDefaultSizeCap = 16;

/// Maximum graph order accepted by the exhaustive subset-enumeration
/// checkers. Defaults to 16; overridden by the FACTORLAB_SIZE_CAP
/// environment variable. The flow solver itself is not capped.
int exhaustive_size_cap();

/// Throws SizeLimitError naming `what` when `order` exceeds the cap.
void require_within_cap(int order, const char* what);

} // namespace factorlab
