#include <catch2/catch_amalgamated.hpp>
#include "wvox/wvox.hpp"
