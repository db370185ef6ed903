#pragma once

#include "scalar.hpp"
#include "matrix.hpp"
#include "graded.hpp"
#include "superalgebra.hpp"
#include "representation.hpp"
#include "o_operators.hpp"
#include "yang_baxter.hpp"
#include "io.hpp"
#include "report.hpp"
#include "sampling.hpp"
