#pragma once

#include "mcb/bench.hpp"
#include "mcb/bigraph.hpp"
#include "mcb/decode.hpp"
#include "mcb/encode.hpp"
#include "mcb/generator.hpp"
#include "mcb/io.hpp"
#include "mcb/occurrence.hpp"
#include "mcb/oracle.hpp"
#include "mcb/solver.hpp"
