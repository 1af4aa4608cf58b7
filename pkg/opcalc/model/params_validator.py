import math

from opcalc.model.deformation import DUAL_MODES
from opcalc.model.utils import build_error

USAGE_ERROR = 2
RESOURCE_ERROR = 3


class ParamsValidator:
    def validate_dim(self, dim):
        if dim is None:
            return True, 2
        if not 1 <= dim <= 4:
            return False, build_error("dim must be between 1 and 4", USAGE_ERROR)
        return True, dim

    def validate_max_degree(self, max_degree):
        if max_degree is None:
            return True, 3
        if not 1 <= max_degree <= 4:
            return False, build_error("max_degree must be between 1 and 4", USAGE_ERROR)
        return True, max_degree

    def validate_trials(self, trials):
        if trials is None:
            return True, 100
        if trials < 1:
            return False, build_error("trials must be at least 1", USAGE_ERROR)
        return True, trials

    def validate_n_max(self, n_max):
        if n_max is None:
            return True, 2
        if n_max < 0:
            return False, build_error("n_max cannot be negative", USAGE_ERROR)
        return True, n_max

    def validate_dual_mode(self, dual_mode, custom_dual):
        if dual_mode is None:
            return True, "self_dual"
        if dual_mode not in DUAL_MODES:
            return False, build_error(f"dual_mode must be one of {', '.join(DUAL_MODES)}", USAGE_ERROR)
        if dual_mode == "custom" and custom_dual is None:
            return False, build_error("dual_mode custom needs --custom-dual", USAGE_ERROR)
        return True, dual_mode

    def validate_time(self, t_end, dt):
        if not (math.isfinite(t_end) and t_end >= 0):
            return False, build_error("t_end must be a finite non-negative number", USAGE_ERROR)
        if not (math.isfinite(dt) and dt > 0):
            return False, build_error("dt must be a positive number", USAGE_ERROR)
        return True, (t_end, dt)

    def validate_rate(self, rate):
        if not math.isfinite(rate):
            return False, build_error("lambda must be finite", USAGE_ERROR)
        return True, rate

    def validate_size(self, dim, max_degree, cap):
        # the largest operation a verification trial builds has 3·max_degree + 1 axes
        if dim ** (3 * max_degree + 1) > cap:
            return False, build_error(
                f"dim={dim}, max_degree={max_degree} exceeds the entry cap of {cap}", RESOURCE_ERROR
            )
        return True, None
