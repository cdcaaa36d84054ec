#pragma once

#include "arcinterp/arc_geometry.hpp"
#include "arcinterp/errors.hpp"
#include "arcinterp/fuse.hpp"
#include "arcinterp/imgio.hpp"
#include "arcinterp/metrics.hpp"
#include "arcinterp/pipeline.hpp"
#include "arcinterp/scene.hpp"
#include "arcinterp/types.hpp"
#include "arcinterp/warp.hpp"
