#pragma once

// Conversions: functions from a term to an equational theorem |- t = t',
// with failure as a value. A conversion is called with the context the term
// lives in and returns a theorem located there (or in an ancestor).

#include <functional>
#include <optional>
#include <vector>

#include "lcf/derived.hpp"

namespace lcf {

using ConvResult = std::optional<Theorem>;
using Conversion = std::function<ConvResult(const Context&, const Term&)>;

class ConvError : public KernelError {
public:
    using KernelError::KernelError;
};

Conversion noConv();
Conversion allConv();
Conversion orElseConv(Conversion c1, Conversion c2);
Conversion thenConv(Conversion c1, Conversion c2);
Conversion tryConv(Conversion c);
/// Applies c until it fails. Throws ConvError after `fuel` successful steps.
Conversion repeatConv(Conversion c, std::size_t fuel = 10000);
Conversion firstConv(std::vector<Conversion> cs);
Conversion everyConv(std::vector<Conversion> cs);

Conversion combConv(Conversion cf, Conversion cx);
Conversion ratorConv(Conversion c);
Conversion randConv(Conversion c);
/// c on both operands of a binary application `op a b`.
Conversion binopConv(Conversion c);
Conversion landConv(Conversion c);
Conversion absConv(Conversion c);
/// c under the binder of `q (\x. body)`.
Conversion quantConv(Conversion c);

/// Sends t to the normalised right-hand side of |- t = t', fails elsewhere.
Conversion subsConv(const Theorem& eq);
/// First-order rewriting with |- !x1..xn. l = r; the right-hand side of the
/// result is beta-eta normalised.
Conversion rewrConv1(const Theorem& eq);
Conversion rewrConv(const std::vector<Theorem>& eqs);

Conversion normalizeConv();
/// Normalises a beta redex; fails on anything else.
Conversion betaConv();

/// One bottom-up pass: subterms first, then c repeatedly at the rebuilt node.
Conversion upConv(Conversion c);
/// Alias of upConv.
Conversion depthConv(Conversion c);
/// Like upConv, but revisits the result after every change at a node.
Conversion redepthConv(Conversion c);
/// Applies c at the outermost positions where it succeeds, left to right,
/// without descending into the results.
Conversion onceDepthConv(Conversion c);

/// Applies c to th's proposition and rewrites th with the result.
std::optional<Theorem> convRule(const Conversion& c, const Theorem& th);

}  // namespace lcf
