#pragma once

#include "orbitq/automorphism.hpp"
#include "orbitq/checks.hpp"
#include "orbitq/classify.hpp"
#include "orbitq/dynkin.hpp"
#include "orbitq/error.hpp"
#include "orbitq/families.hpp"
#include "orbitq/fixtures.hpp"
#include "orbitq/functor_word.hpp"
#include "orbitq/isomorphism.hpp"
#include "orbitq/json_io.hpp"
#include "orbitq/mesh.hpp"
#include "orbitq/nakayama.hpp"
#include "orbitq/orbit_category.hpp"
#include "orbitq/presentation.hpp"
#include "orbitq/quotient.hpp"
#include "orbitq/sweep.hpp"
#include "orbitq/translation_quiver.hpp"
