/**
 * @file e6r.hpp
 * @brief Umbrella include for the library.
 */
#pragma once

#include "e6r/scalar.hpp"
#include "e6r/linalg.hpp"
#include "e6r/parallel.hpp"
#include "e6r/algebra.hpp"
#include "e6r/grading.hpp"
#include "e6r/composition.hpp"
#include "e6r/jordan.hpp"
#include "e6r/tits.hpp"
#include "e6r/sp8.hpp"
#include "e6r/chevalley.hpp"
#include "e6r/models.hpp"
#include "e6r/catalog.hpp"
#include "e6r/json_io.hpp"
#include "e6r/acceptance.hpp"
