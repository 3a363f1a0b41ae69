#pragma once

#include "intergame/api.hpp"
#include "intergame/binary_word.hpp"
#include "intergame/cantor_tree.hpp"
#include "intergame/enumeration.hpp"
#include "intergame/error.hpp"
#include "intergame/game.hpp"
#include "intergame/interval.hpp"
#include "intergame/play.hpp"
#include "intergame/rational.hpp"
#include "intergame/regime.hpp"
#include "intergame/registry.hpp"
#include "intergame/serialize.hpp"
#include "intergame/session.hpp"
#include "intergame/strategy.hpp"
#include "intergame/target.hpp"
