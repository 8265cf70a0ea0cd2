from configparser import ConfigParser


class Config:

    def __init__(self, config_path):
        config = ConfigParser()
        if config_path:
            config.read(config_path)

        self.max_states = config.getint('search', 'max_states', fallback=1000000)
        self.max_depth = config.getint('search', 'max_depth', fallback=64)
        self.chord_margin = config.getint('search', 'chord_margin', fallback=2)

        self.pair_max_crossings = config.getint('pairs', 'max_crossings', fallback=8)
        self.pair_trivial_states = config.getint('pairs', 'trivial_states', fallback=2000)
        self.pair_trivial_depth = config.getint('pairs', 'trivial_depth', fallback=6)

        self.default_limit = config.getint('api', 'default_limit', fallback=100)
        self.max_limit = config.getint('api', 'max_limit', fallback=250)
