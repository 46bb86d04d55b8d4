#pragma once

namespace weylkit {

// Total-degree cap on normal forms. Multiplications whose result would
// exceed the cap throw DegreeLimitExceeded, so runaway expansions abort
// deterministically. Initialized from WEYLKIT_MAX_DEGREE (default 64).
int degree_limit();
void set_degree_limit(int limit);

} // namespace weylkit
