#pragma once

namespace colorheis {

/// Sentinel window for series whose stored entries are their entire support
/// (finite normal forms, polynomials lifted into series). Large enough that
/// the saturating helpers below never wrap.
inline constexpr int kExactWindow = 1 << 28;

constexpr int window_min(int a, int b) { return a < b ? a : b; }

/// Shrink a window by d, saturating at kExactWindow. The result may be
/// negative; callers decide whether that is a WindowUnderflow.
constexpr int window_sub(int w, int d)
{
	if (w >= kExactWindow)
		return kExactWindow;
	return w - d;
}

} // namespace colorheis
