"""Project settings. Only the values that differ from the Kedro defaults are set here;
see https://docs.kedro.org/en/stable/kedro_project_setup/settings.html for the rest."""

# Hooks are executed in a Last-In-First-Out (LIFO) order.
# HOOKS = ()

# Directory that holds configuration.
# CONF_SOURCE = "conf"

# Class that manages how configuration is loaded.
from kedro.config import OmegaConfigLoader  # noqa: E402

CONFIG_LOADER_CLASS = OmegaConfigLoader
# Keyword arguments to pass to the `CONFIG_LOADER_CLASS` constructor.
CONFIG_LOADER_ARGS = {
    "base_env": "base",
    "default_run_env": "local",
    "config_patterns": {
        "parameters": ["parameters*", "parameters*/**", "**/parameters*"],
    },
}
