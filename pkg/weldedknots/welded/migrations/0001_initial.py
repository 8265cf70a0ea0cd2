from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='Diagram',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('code', models.CharField(max_length=4000, unique=True)),
                ('chords', models.IntegerField(default=0)),
                ('create_date', models.DateTimeField(auto_now_add=True)),
            ],
        ),
        migrations.CreateModel(
            name='Certificate',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('create_date', models.DateTimeField(auto_now_add=True)),
                ('kind', models.CharField(choices=[('reduce', 'reduce'), ('unknot', 'unknot'), ('bound', 'bound'),
                                                   ('trivial', 'trivial'), ('u', 'u')], max_length=16)),
                ('status', models.CharField(max_length=16)),
                ('value', models.IntegerField(null=True)),
                ('text', models.TextField(blank=True)),
                ('diagram', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE,
                                              related_name='certificates', to='welded.diagram')),
            ],
            options={
                'ordering': ('create_date', 'id'),
            },
        ),
    ]
