from django.db import models

from .reports import KINDS


class Diagram(models.Model):
    code = models.CharField(max_length=4000, unique=True)
    chords = models.IntegerField(default=0)
    create_date = models.DateTimeField(auto_now_add=True)

    @property
    def last_certificate(self):
        try:
            return self.certificates.last().create_date
        except AttributeError:
            return None

    def to_dict(self):
        return {'id': self.id, 'code': self.code, 'chords': self.chords,
                'last_certificate': self.last_certificate}

    def __str__(self):
        return self.code or '(empty)'


class Certificate(models.Model):
    KIND_CHOICES = [(kind, kind) for kind in KINDS]

    diagram = models.ForeignKey('Diagram', related_name='certificates',
                                on_delete=models.CASCADE, db_index=True)
    create_date = models.DateTimeField(auto_now_add=True)
    kind = models.CharField(max_length=16, choices=KIND_CHOICES)
    status = models.CharField(max_length=16)
    value = models.IntegerField(null=True)
    text = models.TextField(blank=True)

    @classmethod
    def from_report(cls, diagram, report):
        return cls(diagram=diagram, kind=report.kind, status=report.status,
                   value=report.value, text=report.text)

    def to_dict(self):
        return {'id': self.id,
                'create_date': self.create_date,
                'kind': self.kind,
                'status': self.status,
                'value': self.value,
                'text': self.text,
                'diagram': self.diagram_id}

    class Meta:
        ordering = ('create_date', 'id')
