#pragma once

#include "fragsat/atp.hpp"
#include "fragsat/construct.hpp"
#include "fragsat/corpus.hpp"
#include "fragsat/decide.hpp"
#include "fragsat/errors.hpp"
#include "fragsat/fol.hpp"
#include "fragsat/gen.hpp"
#include "fragsat/rng.hpp"
#include "fragsat/surface.hpp"
#include "fragsat/syntax.hpp"
#include "fragsat/vocab.hpp"
