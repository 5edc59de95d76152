#pragma once

#include <nlohmann/json.hpp>

#include "colorheis/aseries.hpp"
#include "colorheis/nogo.hpp"
#include "colorheis/normal_series.hpp"
#include "colorheis/realization.hpp"

namespace colorheis {

/// {"dbound": d, "window": K, "entries": [[j,k,"coeff"],...]}, entries in
/// ascending (j,k); coefficient strings in the canonical Q(i) form.
nlohmann::json series_to_json(const NormalSeries &s);
NormalSeries series_from_json(const nlohmann::json &j);

/// {"window": K, "coeffs": {"deg": "coeff"}, "odd": true?}; the odd marker
/// is emitted when it holds and tolerated (and checked) on input.
nlohmann::json aseries_to_json(const ASeries &f);
ASeries aseries_from_json(const nlohmann::json &j);

/// {"c": "...", "phi": <ASeries>, "psi": <ASeries>, "window": K} or
/// {"V": <ASeries>, "W": <ASeries>, "window": K}
nlohmann::json realization_to_json(const Realization &r);
Realization realization_from_json(const nlohmann::json &j);

nlohmann::json nogo_report_to_json(const NoGoReport &r);

} // namespace colorheis
