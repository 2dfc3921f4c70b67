#pragma once

#include "divknot/core.hpp"
#include "divknot/region.hpp"
#include "divknot/braid.hpp"
#include "divknot/handle_reduction.hpp"
#include "divknot/cp_braid.hpp"
#include "divknot/berge.hpp"
#include "divknot/lshape.hpp"
#include "divknot/trace.hpp"
#include "divknot/laurent.hpp"
#include "divknot/invar.hpp"
#include "divknot/ttk.hpp"
#include "divknot/svg.hpp"
#include "divknot/atlas.hpp"
#include "divknot/verify.hpp"
