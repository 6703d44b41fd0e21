from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='EvaluationRun',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True,
                                        serialize=False, verbose_name='ID')),
                ('corpus', models.CharField(max_length=255,
                                            verbose_name='corpus')),
                ('seed', models.IntegerField(verbose_name='seed')),
                ('k_folds', models.PositiveIntegerField(
                    verbose_name='folds')),
                ('created', models.DateTimeField(auto_now_add=True,
                                                 verbose_name='created')),
            ],
            options={
                'ordering': ['-created'],
                'get_latest_by': 'created',
            },
        ),
        migrations.CreateModel(
            name='MethodResult',
            fields=[
                ('id', models.AutoField(auto_created=True, primary_key=True,
                                        serialize=False, verbose_name='ID')),
                ('method', models.CharField(db_index=True, max_length=20,
                                            verbose_name='method')),
                ('fold', models.PositiveIntegerField(blank=True, null=True,
                                                     verbose_name='fold')),
                ('precision', models.FloatField(verbose_name='precision')),
                ('recall', models.FloatField(verbose_name='recall')),
                ('f1', models.FloatField(verbose_name='F1')),
                ('accuracy', models.FloatField(verbose_name='accuracy')),
                ('auc', models.FloatField(null=True, verbose_name='AUC')),
                ('ndcg_5', models.FloatField(null=True,
                                             verbose_name='NDCG@5')),
                ('ndcg_10', models.FloatField(null=True,
                                              verbose_name='NDCG@10')),
                ('run', models.ForeignKey(
                    on_delete=django.db.models.deletion.CASCADE,
                    to='experiments.evaluationrun', verbose_name='run')),
            ],
            options={
                'ordering': ('run', 'method', 'fold'),
            },
        ),
    ]
