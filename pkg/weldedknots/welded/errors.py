class WeldedError(ValueError):
    pass


class GaussCodeError(WeldedError):
    pass


class MalformedToken(GaussCodeError):
    def __init__(self, token, index):
        self.token = token
        self.index = index

    def __str__(self):
        return "token {!r} at index {} is not of the form (O|U)<label>(+|-)".format(self.token, self.index)


class LabelCountMismatch(GaussCodeError):
    def __init__(self, label, overs, unders):
        self.label = label
        self.overs = overs
        self.unders = unders

    def __str__(self):
        return ("label {} occurs {} time(s) as O and {} time(s) as U, "
                "expected exactly once each").format(self.label, self.overs, self.unders)


class SignMismatch(GaussCodeError):
    def __init__(self, label):
        self.label = label

    def __str__(self):
        return "both occurrences of label {} must carry the same sign".format(self.label)


class UnknownChord(WeldedError):
    def __init__(self, chord_id):
        self.chord_id = chord_id

    def __str__(self):
        return "chord {} does not exist".format(self.chord_id)


class InapplicableMove(WeldedError):
    def __init__(self, move, reason):
        self.move = move
        self.reason = reason

    def __str__(self):
        return "move {} is not applicable: {}".format(self.move, self.reason)


class ForbiddenMove(InapplicableMove):
    def __str__(self):
        return "move {} is the forbidden move: {}".format(self.move, self.reason)


class NotRemovable(WeldedError):
    def __init__(self, chord_id):
        self.chord_id = chord_id

    def __str__(self):
        return "chord {} has a head endpoint on both of its arcs".format(self.chord_id)


class EmptyDiagram(WeldedError):
    def __str__(self):
        return "the diagram has no chords"


class LimitsExceeded(WeldedError):
    def __init__(self, best, limits):
        self.best = best
        self.limits = limits

    def __str__(self):
        return "no subset certified within limits {}".format(self.limits)


class InvalidPD(WeldedError):
    def __init__(self, violations):
        self.violations = list(violations)

    def __str__(self):
        return "invalid planar diagram: {}".format("; ".join(str(v) for v in self.violations))


class NotClassical(WeldedError):
    def __init__(self, crossing_id):
        self.crossing_id = crossing_id

    def __str__(self):
        return "crossing {} is welded, not classical".format(self.crossing_id)


class OracleInconsistency(WeldedError):
    def __init__(self, kind, signature, first, second):
        self.kind = kind
        self.signature = signature
        self.first = first
        self.second = second

    def __str__(self):
        return ("{} variant {} induced conflicting Gauss patterns {} and {} "
                "on different closures").format(self.kind, self.signature, self.first, self.second)


class BoundViolation(WeldedError):
    def __init__(self, chord_id, reason):
        self.chord_id = chord_id
        self.reason = reason

    def __str__(self):
        return "bound certificate at chord {} is inconsistent: {}".format(self.chord_id, self.reason)
